//! Same-shape pairs of anti-normal tableaux carrying the corner operators,
//! and crystals on (matrix, tableau, tableau) triples.
//!
//! A matrix corresponds under RSK to a pair (S, T) over the dual and
//! positive alphabets. Away from index 0 the pair inherits the one-sided
//! actions; at 0 the move is governed by a sign attached to each column:
//! a column whose tops are exactly (-1^v, 1) can give that pair up, a
//! column whose tops are both larger (or which is empty) can receive one.
//! After cancelling every minus against a plus on a column further right,
//! raising acts at the leftmost surviving minus and lowering at the
//! rightmost surviving plus. One empty phantom column suffices, because
//! further phantom pluses can never be the rightmost one.
//!
//! Triples extend matrices by a fixed dual-alphabet seed and a fixed
//! normal tableau; negative indices act on the pair (matrix, seed),
//! positive ones on (matrix, tableau), and 0 on the matrix alone. Both
//! structures are finite stand-ins for highest-weight crystals of level n,
//! the cut-off being the width of the (skew) insertion tableau.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::crystal::{route, route_target, Alphabet, Dir, Letter, Weight};
use crate::matrix::SparseMatrix;
use crate::rsk::{column_count, rsk, rsk_inverse, skew_rsk};
use crate::shapes::Partition;
use crate::tableau::{Orientation, Tableau};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
    #[serde(rename = ".")]
    Dot,
}

/// Column signs indexed from the right, one slot per column of the shape
/// plus a phantom empty column at the far left.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignSequence {
    signs: Vec<Sign>,
}

impl SignSequence {
    pub fn new(signs: Vec<Sign>) -> Self {
        SignSequence { signs }
    }

    /// Slot `k - 1` holds the sign of the `k`-th column from the right.
    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// Cancels every minus against the nearest plus on its right (reading
    /// columns right to left, a plus at a smaller column index), repeatedly.
    pub fn reduced(&self) -> SignSequence {
        let mut signs = self.signs.clone();
        let mut open = Vec::new();
        for idx in (0..signs.len()).rev() {
            match signs[idx] {
                Sign::Minus => open.push(idx),
                Sign::Plus => {
                    if let Some(minus) = open.pop() {
                        signs[minus] = Sign::Dot;
                        signs[idx] = Sign::Dot;
                    }
                }
                Sign::Dot => {}
            }
        }
        SignSequence { signs }
    }

    /// Column of the leftmost surviving minus, if any.
    pub fn raise_column(&self) -> Option<u32> {
        let red = self.reduced();
        red.signs.iter().rposition(|&s| s == Sign::Minus).map(|idx| idx as u32 + 1)
    }

    /// Column of the rightmost surviving plus; the phantom column
    /// guarantees one exists.
    pub fn lower_column(&self) -> u32 {
        let red = self.reduced();
        let idx = red
            .signs
            .iter()
            .position(|&s| s == Sign::Plus)
            .expect("the phantom column always survives");
        idx as u32 + 1
    }

    /// Number of surviving minuses.
    pub fn minus_count(&self) -> usize {
        self.reduced().signs.iter().filter(|&&s| s == Sign::Minus).count()
    }
}

impl fmt::Display for SignSequence {
    /// Prints left to right from the phantom column down to column 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let glyphs: Vec<&str> = self
            .signs
            .iter()
            .rev()
            .map(|s| match s {
                Sign::Plus => "+",
                Sign::Minus => "-",
                Sign::Dot => ".",
            })
            .collect();
        write!(f, "({})", glyphs.join(", "))
    }
}

/// A pair of same-shape straight anti-normal tableaux, the left over the
/// dual alphabet and the right over the positive one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "BiTableauRaw", into = "BiTableauRaw")]
pub struct BiTableau {
    s: Tableau,
    t: Tableau,
}

#[derive(Serialize, Deserialize)]
struct BiTableauRaw {
    s: Tableau,
    t: Tableau,
}

impl TryFrom<BiTableauRaw> for BiTableau {
    type Error = Error;
    fn try_from(raw: BiTableauRaw) -> Result<Self> {
        BiTableau::new(raw.s, raw.t)
    }
}

impl From<BiTableau> for BiTableauRaw {
    fn from(b: BiTableau) -> BiTableauRaw {
        BiTableauRaw { s: b.s, t: b.t }
    }
}

impl BiTableau {
    pub fn new(s: Tableau, t: Tableau) -> Result<Self> {
        if s.orientation() != Orientation::AntiNormal
            || t.orientation() != Orientation::AntiNormal
            || !s.is_straight()
            || !t.is_straight()
            || s.outer() != t.outer()
        {
            return Err(Error::ShapeMismatch);
        }
        if s.alphabet() != Alphabet::NegativeDual || t.alphabet() != Alphabet::Positive {
            return Err(Error::AlphabetMismatch);
        }
        Ok(BiTableau { s, t })
    }

    pub fn empty() -> Self {
        BiTableau {
            s: Tableau::empty(Orientation::AntiNormal, Alphabet::NegativeDual),
            t: Tableau::empty(Orientation::AntiNormal, Alphabet::Positive),
        }
    }

    pub fn from_matrix(a: &SparseMatrix) -> Self {
        let (s, t) = rsk(a);
        BiTableau { s, t }
    }

    /// The matrix on the other side of the correspondence; every same-shape
    /// pair has one.
    pub fn matrix(&self) -> SparseMatrix {
        rsk_inverse(&self.s, &self.t).expect("same-shape pairs always correspond")
    }

    pub fn s(&self) -> &Tableau {
        &self.s
    }

    pub fn t(&self) -> &Tableau {
        &self.t
    }

    pub fn shape(&self) -> &Partition {
        self.s.outer()
    }

    pub fn weight(&self) -> Weight {
        self.s.weight() + self.t.weight()
    }

    fn column_sign(&self, k: u32) -> Sign {
        match (self.s.top_of_column(k), self.t.top_of_column(k)) {
            (None, None) => Sign::Plus,
            (Some(s), Some(t)) => {
                let s_low = s.value() == -1;
                let t_low = t.value() == 1;
                if s_low && t_low {
                    Sign::Minus
                } else if !s_low && !t_low {
                    Sign::Plus
                } else {
                    Sign::Dot
                }
            }
            _ => unreachable!("the tableaux share a shape"),
        }
    }

    pub fn signature(&self) -> SignSequence {
        let cols = self.shape().first();
        SignSequence { signs: (1..=cols + 1).map(|k| self.column_sign(k)).collect() }
    }

    pub fn apply(&self, i: i64, dir: Dir) -> Option<BiTableau> {
        if i == 0 {
            let signature = self.signature();
            return match dir {
                Dir::Raise => {
                    let k = signature.raise_column()?;
                    let (s, ls) = self.s.with_top_removed(k).expect("minus columns have removable tops");
                    let (t, lt) = self.t.with_top_removed(k).expect("minus columns have removable tops");
                    debug_assert_eq!((ls.value(), lt.value()), (-1, 1));
                    Some(BiTableau { s, t })
                }
                Dir::Lower => {
                    let k = signature.lower_column();
                    let s = self
                        .s
                        .with_top_added(k, Letter::dual(1))
                        .expect("plus columns accept a new top");
                    let t = self
                        .t
                        .with_top_added(k, Letter::positive(1).unwrap())
                        .expect("plus columns accept a new top");
                    Some(BiTableau { s, t })
                }
            };
        }
        if i < 0 {
            self.s.apply(i, dir).map(|s| BiTableau { s, t: self.t.clone() })
        } else {
            self.t.apply(i, dir).map(|t| BiTableau { s: self.s.clone(), t })
        }
    }

    pub fn eps(&self, i: i64) -> i64 {
        if i == 0 {
            self.signature().minus_count() as i64
        } else if i < 0 {
            self.s.eps(i) as i64
        } else {
            self.t.eps(i) as i64
        }
    }

    pub fn phi(&self, i: i64) -> i64 {
        if i == 0 {
            self.weight().pairing(0) + self.eps(0)
        } else if i < 0 {
            self.s.phi(i) as i64
        } else {
            self.t.phi(i) as i64
        }
    }
}

/// A matrix together with a fixed-shape dual seed and a fixed-shape normal
/// tableau, acted on factorwise.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "VermaTripleRaw", into = "VermaTripleRaw")]
pub struct VermaTriple {
    matrix: SparseMatrix,
    negative: Tableau,
    positive: Tableau,
}

#[derive(Serialize, Deserialize)]
struct VermaTripleRaw {
    matrix: SparseMatrix,
    negative: Tableau,
    positive: Tableau,
    mu: Partition,
    nu: Partition,
}

impl TryFrom<VermaTripleRaw> for VermaTriple {
    type Error = Error;
    fn try_from(raw: VermaTripleRaw) -> Result<Self> {
        let triple = VermaTriple::new(raw.matrix, raw.negative, raw.positive)?;
        if triple.mu() != &raw.mu || triple.nu() != &raw.nu {
            return Err(Error::ShapeMismatch);
        }
        Ok(triple)
    }
}

impl From<VermaTriple> for VermaTripleRaw {
    fn from(v: VermaTriple) -> VermaTripleRaw {
        let (mu, nu) = (v.mu().clone(), v.nu().clone());
        VermaTripleRaw { matrix: v.matrix, negative: v.negative, positive: v.positive, mu, nu }
    }
}

impl VermaTriple {
    pub fn new(matrix: SparseMatrix, negative: Tableau, positive: Tableau) -> Result<Self> {
        if negative.orientation() != Orientation::AntiNormal
            || positive.orientation() != Orientation::Normal
            || !negative.is_straight()
            || !positive.is_straight()
        {
            return Err(Error::ShapeMismatch);
        }
        if negative.alphabet() != Alphabet::NegativeDual
            || positive.alphabet() != Alphabet::Positive
        {
            return Err(Error::AlphabetMismatch);
        }
        Ok(VermaTriple { matrix, negative, positive })
    }

    /// The unique triple of the given shapes annihilated by every raising
    /// operator: zero matrix and extremal fillings on both sides.
    pub fn highest(mu: &Partition, nu: &Partition) -> Self {
        VermaTriple {
            matrix: SparseMatrix::zero(),
            negative: Tableau::highest(Orientation::AntiNormal, Alphabet::NegativeDual, mu),
            positive: Tableau::highest(Orientation::Normal, Alphabet::Positive, nu),
        }
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn negative(&self) -> &Tableau {
        &self.negative
    }

    pub fn positive(&self) -> &Tableau {
        &self.positive
    }

    pub fn mu(&self) -> &Partition {
        self.negative.outer()
    }

    pub fn nu(&self) -> &Partition {
        self.positive.outer()
    }

    pub fn weight(&self) -> Weight {
        self.matrix.weight() + self.negative.weight() + self.positive.weight()
    }

    fn factors(&self, i: i64) -> [(u32, u32); 2] {
        let side = if i < 0 { &self.negative } else { &self.positive };
        [
            (self.matrix.eps(i) as u32, self.matrix.phi(i) as u32),
            (side.eps(i), side.phi(i)),
        ]
    }

    pub fn apply(&self, i: i64, dir: Dir) -> Option<VermaTriple> {
        if i == 0 {
            let matrix = self.matrix.apply(0, dir)?;
            return Some(VermaTriple { matrix, ..self.clone() });
        }
        let target = route_target(&route(self.factors(i)), dir)?;
        let mut next = self.clone();
        if target == 0 {
            next.matrix = self.matrix.apply(i, dir)?;
        } else if i < 0 {
            next.negative = self.negative.apply(i, dir)?;
        } else {
            next.positive = self.positive.apply(i, dir)?;
        }
        Some(next)
    }

    pub fn eps(&self, i: i64) -> i64 {
        if i == 0 {
            self.matrix.eps(0)
        } else {
            route(self.factors(i)).eps as i64
        }
    }

    pub fn phi(&self, i: i64) -> i64 {
        if i == 0 {
            // The side tableaux contribute to the pairing even though the
            // corner operators never touch them.
            self.weight().pairing(0) + self.eps(0)
        } else {
            route(self.factors(i)).phi as i64
        }
    }
}

/// Whether the pair of `a` fits in `n` columns, the finite test for
/// membership in the level-`n` component.
pub fn within_level(a: &SparseMatrix, n: u32) -> bool {
    column_count(a) <= n
}

/// The finite encoding of a matrix inside the level-`n` component.
pub fn level_decode(a: &SparseMatrix, n: u32) -> Result<BiTableau> {
    let b = BiTableau::from_matrix(a);
    if b.shape().first() > n {
        return Err(Error::OutsideImage("the pair needs more columns than the level allows"));
    }
    Ok(b)
}

/// The finite encoding of a triple inside the level-`n` component: the
/// seeded insertion tableau, its skew recording tableau, and the fixed
/// normal tableau.
pub fn triple_level_decode(
    v: &VermaTriple,
    n: u32,
) -> Result<(Tableau, Tableau, Tableau)> {
    let (p, q) = skew_rsk(v.negative(), v.matrix())?;
    if p.outer().first() > n {
        return Err(Error::OutsideImage("the pair needs more columns than the level allows"));
    }
    Ok((p, q, v.positive().clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::SkewShape;
    use crate::tableau::bounded;
    use std::collections::BTreeSet;

    fn anti(alphabet: Alphabet, rows: &[&[i64]]) -> Tableau {
        Tableau::from_rows(
            Orientation::AntiNormal,
            alphabet,
            Partition::empty(),
            rows.iter().map(|r| r.to_vec()).collect(),
        )
        .unwrap()
    }

    /// The signed pair used across the displayed corner-move examples.
    fn nex_pair() -> BiTableau {
        BiTableau::new(
            anti(Alphabet::NegativeDual, &[&[-1, -2, -4, -4], &[-1, -3]]),
            anti(Alphabet::Positive, &[&[1, 1, 3, 4], &[1, 3]]),
        )
        .unwrap()
    }

    fn displayed_4x4() -> SparseMatrix {
        SparseMatrix::from_dense(&[
            vec![1, 0, 1, 0],
            vec![0, 0, 0, 1],
            vec![1, 0, 0, 0],
            vec![1, 0, 1, 0],
        ])
        .unwrap()
    }

    #[test]
    fn signature_of_the_signed_pair() {
        use Sign::*;
        let b = nex_pair();
        let sig = b.signature();
        assert_eq!(sig.signs(), &[Plus, Minus, Dot, Minus, Plus]);
        assert_eq!(sig.reduced().signs(), &[Dot, Dot, Dot, Minus, Plus]);
        assert_eq!(sig.raise_column(), Some(4));
        assert_eq!(sig.lower_column(), 5);
        assert_eq!(sig.to_string(), "(+, -, ., -, +)");
        assert_eq!(b.eps(0), 1);
        assert_eq!(b.phi(0), -4);
    }

    #[test]
    fn corner_moves_match_the_display() {
        let b = nex_pair();
        let raised = b.apply(0, Dir::Raise).unwrap();
        assert_eq!(
            raised,
            BiTableau::new(
                anti(Alphabet::NegativeDual, &[&[-2, -4, -4], &[-1, -3]]),
                anti(Alphabet::Positive, &[&[1, 3, 4], &[1, 3]]),
            )
            .unwrap()
        );
        let lowered = b.apply(0, Dir::Lower).unwrap();
        assert_eq!(
            lowered,
            BiTableau::new(
                anti(Alphabet::NegativeDual, &[&[-1, -1, -2, -4, -4], &[-1, -3]]),
                anti(Alphabet::Positive, &[&[1, 1, 1, 3, 4], &[1, 3]]),
            )
            .unwrap()
        );
    }

    #[test]
    fn pair_of_the_displayed_matrix() {
        let a = displayed_4x4();
        let b = BiTableau::from_matrix(&a);
        assert_eq!(b, nex_pair());
        assert_eq!(b.matrix(), a);
        assert_eq!(b.eps(0), a.eps(0));
        assert_eq!(b.phi(0), a.phi(0));
    }

    #[test]
    fn empty_pair_has_one_phantom_plus() {
        let b = BiTableau::empty();
        assert_eq!(b.signature().signs(), &[Sign::Plus]);
        assert_eq!(b.apply(0, Dir::Raise), None);
        let down = b.apply(0, Dir::Lower).unwrap();
        assert_eq!(down.s().rows(), &[vec![-1]]);
        assert_eq!(down.t().rows(), &[vec![1]]);
        assert_eq!(b.eps(0), 0);
        assert_eq!(b.phi(0), 0);
    }

    #[test]
    fn all_minus_columns_stay_reduced() {
        use Sign::*;
        let b = BiTableau::new(
            anti(Alphabet::NegativeDual, &[&[-1, -1]]),
            anti(Alphabet::Positive, &[&[1, 1]]),
        )
        .unwrap();
        let sig = b.signature();
        assert_eq!(sig.signs(), &[Minus, Minus, Plus]);
        assert_eq!(sig.reduced().signs(), sig.signs());
        assert_eq!(sig.raise_column(), Some(2));
    }

    /// Cancels one pair at a time, picking it by the given scan order; the
    /// result must not depend on that order.
    fn naive_reduce(signs: &[Sign], rightmost_first: bool) -> Vec<Sign> {
        let mut signs = signs.to_vec();
        loop {
            let mut pairs = Vec::new();
            for hi in 0..signs.len() {
                if signs[hi] != Sign::Minus {
                    continue;
                }
                let lo = (0..hi)
                    .rev()
                    .take_while(|&lo| signs[lo] != Sign::Minus)
                    .find(|&lo| signs[lo] == Sign::Plus);
                if let Some(lo) = lo {
                    pairs.push((hi, lo));
                }
            }
            let pick = if rightmost_first { pairs.first() } else { pairs.last() };
            match pick {
                Some(&(hi, lo)) => {
                    signs[hi] = Sign::Dot;
                    signs[lo] = Sign::Dot;
                }
                None => return signs,
            }
        }
    }

    #[test]
    fn reduction_is_order_independent() {
        let glyphs = [Sign::Plus, Sign::Minus, Sign::Dot];
        let mut stack = vec![Vec::new()];
        for _ in 0..7 {
            stack = stack
                .into_iter()
                .flat_map(|v: Vec<Sign>| {
                    glyphs.iter().map(move |&g| {
                        let mut v = v.clone();
                        v.push(g);
                        v
                    })
                })
                .collect();
            for signs in &stack {
                let canonical = SignSequence { signs: signs.clone() }.reduced();
                assert_eq!(canonical.signs(), naive_reduce(signs, true));
                assert_eq!(canonical.signs(), naive_reduce(signs, false));
            }
        }
    }

    fn bounded_pairs(size: u32, max_rank: u32) -> Vec<BiTableau> {
        let mut out = vec![];
        for shape in crate::shapes::bounded_partitions(size, size as usize) {
            let skew = SkewShape::straight(shape);
            let left =
                bounded(Orientation::AntiNormal, Alphabet::NegativeDual, &skew, max_rank)
                    .unwrap();
            let right =
                bounded(Orientation::AntiNormal, Alphabet::Positive, &skew, max_rank).unwrap();
            for s in &left {
                for t in &right {
                    out.push(BiTableau::new(s.clone(), t.clone()).unwrap());
                }
            }
        }
        out
    }

    #[test]
    fn axioms_hold_on_bounded_pairs() {
        for b in bounded_pairs(3, 3) {
            for i in -2..=2i64 {
                for dir in [Dir::Raise, Dir::Lower] {
                    if let Some(next) = b.apply(i, dir) {
                        let back = match dir {
                            Dir::Raise => next.apply(i, Dir::Lower),
                            Dir::Lower => next.apply(i, Dir::Raise),
                        };
                        assert_eq!(back.as_ref(), Some(&b));
                        let delta = Weight::simple_root(i);
                        let expected = match dir {
                            Dir::Raise => b.weight() + delta,
                            Dir::Lower => b.weight() - delta,
                        };
                        assert_eq!(next.weight(), expected);
                    }
                }
                assert_eq!(b.phi(i) - b.eps(i), b.weight().pairing(i));
                let raises = std::iter::successors(Some(b.clone()), |x| x.apply(i, Dir::Raise))
                    .count() as i64
                    - 1;
                assert_eq!(b.eps(i), raises, "pair {b:?} at {i}");
            }
        }
    }

    #[test]
    fn lowering_reaches_every_bounded_pair() {
        let universe: BTreeSet<BiTableau> = bounded_pairs(3, 3).into_iter().collect();
        let inside = |b: &BiTableau| {
            b.shape().size() <= 3
                && b.s().word().values().iter().all(|&v| v >= -3)
                && b.t().word().values().iter().all(|&v| v <= 3)
        };
        let mut seen = BTreeSet::from([BiTableau::empty()]);
        let mut frontier = vec![BiTableau::empty()];
        while let Some(b) = frontier.pop() {
            for i in -2..=2i64 {
                if let Some(next) = b.apply(i, Dir::Lower) {
                    if inside(&next) && seen.insert(next.clone()) {
                        frontier.push(next);
                    }
                }
            }
        }
        assert_eq!(seen, universe);
    }

    fn matrix_sample(max: u32, sum: u64) -> Vec<SparseMatrix> {
        let mut out = vec![SparseMatrix::zero()];
        for i in 1..=max {
            for j in 1..=max {
                out = out
                    .into_iter()
                    .flat_map(|m| {
                        (0..=(sum - m.sum())).map(move |a| {
                            if a == 0 {
                                m.clone()
                            } else {
                                SparseMatrix::new(m.entries().chain([((i, j), a)])).unwrap()
                            }
                        })
                    })
                    .collect();
            }
        }
        out
    }

    #[test]
    fn correspondence_intertwines_every_index() {
        for a in matrix_sample(3, 3) {
            let b = BiTableau::from_matrix(&a);
            for i in -3..=3i64 {
                assert_eq!(a.eps(i), b.eps(i), "matrix {a:?} at {i}");
                assert_eq!(a.phi(i), b.phi(i), "matrix {a:?} at {i}");
                for dir in [Dir::Raise, Dir::Lower] {
                    assert_eq!(
                        a.apply(i, dir).map(|m| BiTableau::from_matrix(&m)),
                        b.apply(i, dir),
                        "matrix {a:?} at {i}"
                    );
                }
            }
        }
    }

    #[test]
    fn highest_triple_is_annihilated() {
        for (mu, nu) in [
            (vec![1], vec![1]),
            (vec![2, 1], vec![2]),
            (vec![], vec![3, 1]),
        ] {
            let v = VermaTriple::highest(
                &Partition::new(mu).unwrap(),
                &Partition::new(nu).unwrap(),
            );
            for i in -3..=3i64 {
                assert_eq!(v.apply(i, Dir::Raise), None, "at {i}");
            }
            assert_eq!(
                v.weight(),
                v.negative().weight() + v.positive().weight()
            );
        }
    }

    #[test]
    fn empty_shapes_reduce_to_the_matrix_crystal() {
        let empty = Partition::empty();
        for a in matrix_sample(2, 2) {
            let v = VermaTriple::new(
                a.clone(),
                Tableau::highest(Orientation::AntiNormal, Alphabet::NegativeDual, &empty),
                Tableau::highest(Orientation::Normal, Alphabet::Positive, &empty),
            )
            .unwrap();
            for i in -2..=2i64 {
                assert_eq!(v.eps(i), a.eps(i));
                assert_eq!(v.phi(i), a.phi(i));
                for dir in [Dir::Raise, Dir::Lower] {
                    assert_eq!(
                        v.apply(i, dir).map(|w| w.matrix().clone()),
                        a.apply(i, dir)
                    );
                }
            }
        }
    }

    #[test]
    fn triple_closure_fills_the_bounded_box() {
        let mu = Partition::new(vec![1]).unwrap();
        let nu = Partition::new(vec![1]).unwrap();
        let start = VermaTriple::highest(&mu, &nu);
        let inside = |v: &VermaTriple| {
            v.matrix().sum() <= 2
                && v.matrix().max_row() <= 3
                && v.matrix().max_col() <= 3
                && v.negative().word().values().iter().all(|&x| x >= -3)
                && v.positive().word().values().iter().all(|&x| x <= 3)
        };
        let mut seen = BTreeSet::from([start.clone()]);
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            for i in -2..=2i64 {
                if let Some(next) = v.apply(i, Dir::Lower) {
                    if inside(&next) && seen.insert(next.clone()) {
                        frontier.push(next);
                    }
                }
            }
        }
        let mut expected = BTreeSet::new();
        let skew_mu = SkewShape::straight(mu.clone());
        let skew_nu = SkewShape::straight(nu.clone());
        for a in matrix_sample(3, 2) {
            for s in bounded(Orientation::AntiNormal, Alphabet::NegativeDual, &skew_mu, 3)
                .unwrap()
            {
                for t in bounded(Orientation::Normal, Alphabet::Positive, &skew_nu, 3).unwrap()
                {
                    expected.insert(VermaTriple::new(a.clone(), s.clone(), t).unwrap());
                }
            }
        }
        assert_eq!(seen.len(), 495);
        assert_eq!(seen, expected);
    }

    #[test]
    fn triple_axioms_on_a_sample() {
        let mu = Partition::new(vec![1]).unwrap();
        let nu = Partition::new(vec![2]).unwrap();
        let skew_mu = SkewShape::straight(mu.clone());
        let skew_nu = SkewShape::straight(nu.clone());
        for a in matrix_sample(2, 2) {
            for s in bounded(Orientation::AntiNormal, Alphabet::NegativeDual, &skew_mu, 2)
                .unwrap()
            {
                for t in bounded(Orientation::Normal, Alphabet::Positive, &skew_nu, 3).unwrap()
                {
                    let v = VermaTriple::new(a.clone(), s.clone(), t).unwrap();
                    for i in -2..=2i64 {
                        assert_eq!(v.phi(i) - v.eps(i), v.weight().pairing(i));
                        for dir in [Dir::Raise, Dir::Lower] {
                            if let Some(next) = v.apply(i, dir) {
                                let back = match dir {
                                    Dir::Raise => next.apply(i, Dir::Lower),
                                    Dir::Lower => next.apply(i, Dir::Raise),
                                };
                                assert_eq!(back.as_ref(), Some(&v));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn level_bounds_follow_the_column_count() {
        let zero = SparseMatrix::zero();
        assert!(within_level(&zero, 1));
        assert!(within_level(&zero, 4));
        assert!(within_level(&displayed_4x4(), 4));
        assert!(!within_level(&displayed_4x4(), 3));
        // A strictly falling dual word of length three needs three columns.
        let stairs = SparseMatrix::from_dense(&[
            vec![0, 0, 1],
            vec![0, 1, 0],
            vec![1, 0, 0],
        ])
        .unwrap();
        assert_eq!(column_count(&stairs), 3);
        assert!(!within_level(&stairs, 2));
        assert!(within_level(&stairs, 3));
        assert_eq!(
            level_decode(&stairs, 2),
            Err(Error::OutsideImage("the pair needs more columns than the level allows"))
        );
        assert_eq!(level_decode(&displayed_4x4(), 4).unwrap(), nex_pair());
    }

    #[test]
    fn triple_decoding_matches_the_worked_example() {
        let a = SparseMatrix::from_dense(&[vec![1, 1, 0], vec![0, 0, 1], vec![1, 0, 1]])
            .unwrap();
        let seed = anti(Alphabet::NegativeDual, &[&[-3, -4]]);
        let s_pos = Tableau::from_rows(
            Orientation::Normal,
            Alphabet::Positive,
            Partition::empty(),
            vec![vec![1, 2], vec![2, 3], vec![3], vec![5]],
        )
        .unwrap();
        let v = VermaTriple::new(a, seed.clone(), s_pos.clone()).unwrap();
        let (p, q, right) = triple_level_decode(&v, 4).unwrap();
        assert_eq!(
            p,
            anti(Alphabet::NegativeDual, &[&[-3, -3, -4], &[-2, -3], &[-1, -1]])
        );
        assert_eq!(
            q,
            Tableau::from_rows(
                Orientation::AntiNormal,
                Alphabet::Positive,
                Partition::new(vec![2]).unwrap(),
                vec![vec![1], vec![3, 3], vec![1, 2]],
            )
            .unwrap()
        );
        assert_eq!(right, s_pos);
        assert_eq!(triple_level_decode(&v, 2), Err(Error::OutsideImage(
            "the pair needs more columns than the level allows"
        )));
        // Undoing the recorded insertions restores the seed and the matrix.
        let (seed2, a2) = crate::rsk::skew_rsk_inverse(&p, &q).unwrap();
        assert_eq!(seed2, seed);
        assert_eq!(a2, *v.matrix());
    }

    #[test]
    fn serde_roundtrips() {
        let b = nex_pair();
        let json = serde_json::to_string(&b).unwrap();
        assert_eq!(serde_json::from_str::<BiTableau>(&json).unwrap(), b);
        let v = VermaTriple::highest(
            &Partition::new(vec![2]).unwrap(),
            &Partition::new(vec![2, 2, 1, 1]).unwrap(),
        );
        let json = serde_json::to_string(&v).unwrap();
        assert!(json.contains("\"mu\":[2]"));
        let back: VermaTriple = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
        let tampered = json.replace("\"mu\":[2]", "\"mu\":[3]");
        assert!(serde_json::from_str::<VermaTriple>(&tampered).is_err());
    }
}
