//! Exact character arithmetic: finitely supported integer combinations of
//! weights, their specializations into truncated power series, flagged
//! Schur determinants, and the geometric-sum operators attached to the
//! simple reflections.
//!
//! Everything is integral.  Series live in a fixed ambient ring described
//! by a [`Vars`] value — counts of `x` and `y` variables and a total
//! degree cap — and every binary operation insists the ambients agree.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::crystal::Weight;
use crate::demazure::{Group, GrassmannianElement};
use crate::shapes::{bounded_partitions, Partition, SkewShape, Support};
use crate::tableau::{self, Orientation};
use crate::crystal::Alphabet;
use crate::{Error, Result};

/// An integer combination of exponentials of weights.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightPolynomial {
    terms: BTreeMap<Weight, BigInt>,
}

impl WeightPolynomial {
    pub fn zero() -> Self {
        WeightPolynomial::default()
    }

    /// The exponential of the zero weight.
    pub fn one() -> Self {
        WeightPolynomial::monomial(Weight::zero())
    }

    pub fn monomial(weight: Weight) -> Self {
        let mut p = WeightPolynomial::zero();
        p.add_term(weight, BigInt::one());
        p
    }

    /// Sum of the exponentials of the given weights, with multiplicity.
    pub fn character(weights: impl IntoIterator<Item = Weight>) -> Self {
        let mut p = WeightPolynomial::zero();
        for w in weights {
            p.add_term(w, BigInt::one());
        }
        p
    }

    pub fn add_term(&mut self, weight: Weight, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(weight) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn coeff(&self, weight: &Weight) -> BigInt {
        self.terms.get(weight).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiplies every term by the exponential of `by`.
    pub fn shifted(&self, by: &Weight) -> Self {
        let mut out = WeightPolynomial::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone() + by.clone(), c.clone());
        }
        out
    }

    /// Sends `e^{-eps(-i)}` to `x_i` and `e^{eps(j)}` to `y_j`, dropping
    /// terms beyond the degree cap.  Level coordinates must have been
    /// shifted away beforehand, and every exponent must be a nonnegative
    /// power of the generators.
    pub fn specialize(&self, vars: Vars) -> Result<TruncatedSeries> {
        let mut out = vars.zero();
        for (w, c) in &self.terms {
            if w.level_coeff() != 0 {
                return Err(Error::BadSpecialization("level coordinate must be shifted away"));
            }
            let mut xe = vec![0u32; vars.x];
            let mut ye = vec![0u32; vars.y];
            for (i, coeff) in w.eps_support() {
                if i < 0 {
                    if coeff > 0 {
                        return Err(Error::BadSpecialization(
                            "negative coordinates must appear with nonpositive coefficients",
                        ));
                    }
                    let idx = (-i) as usize;
                    if idx > vars.x {
                        return Err(Error::NotEnoughVariables(idx));
                    }
                    xe[idx - 1] = (-coeff) as u32;
                } else {
                    if coeff < 0 {
                        return Err(Error::BadSpecialization(
                            "positive coordinates must appear with nonnegative coefficients",
                        ));
                    }
                    let idx = i as usize;
                    if idx > vars.y {
                        return Err(Error::NotEnoughVariables(idx));
                    }
                    ye[idx - 1] = coeff as u32;
                }
            }
            if degree(&xe, &ye) <= vars.cap {
                out.add_term((xe, ye), c.clone());
            }
        }
        Ok(out)
    }
}

impl std::ops::Add for WeightPolynomial {
    type Output = WeightPolynomial;
    fn add(mut self, rhs: WeightPolynomial) -> WeightPolynomial {
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
        self
    }
}

/// The geometric-sum operator attached to index `i`: on an exponential
/// with pairing `m` it produces the alternating string sum — `m ≥ 0` gives
/// the `m+1` terms walking down the root string, `m = -1` gives zero, and
/// `m ≤ -2` gives the negated terms walking up.
pub fn demazure_op(p: &WeightPolynomial, i: i64) -> WeightPolynomial {
    string_sum(p, &Weight::simple_root(i), |w| w.pairing(i))
}

/// Operators composed right to left along the word.
pub fn demazure_word(p: &WeightPolynomial, word: &[i64]) -> WeightPolynomial {
    word.iter().rev().fold(p.clone(), |acc, &i| demazure_op(&acc, i))
}

/// Folded variant: the root at 0 is scaled by `epsilon` and the roots at
/// `i > 0` are merged with their mirrors, with pairings to match.  Every
/// term must lie on the folded lattice.
pub fn folded_demazure_op(p: &WeightPolynomial, i: i64, epsilon: u32) -> Result<WeightPolynomial> {
    if !(1..=2).contains(&epsilon) {
        return Err(Error::BadFoldParameter);
    }
    assert!(i >= 0, "folded operators are indexed by nonnegative integers");
    for (w, _) in p.terms() {
        if !on_folded_lattice(w, epsilon) {
            return Err(Error::OffFoldedLattice);
        }
    }
    let e = epsilon as i64;
    let root = if i == 0 {
        Weight::simple_root(0) * e
    } else {
        Weight::simple_root(i) + Weight::simple_root(-i)
    };
    Ok(string_sum(p, &root, |w| if i == 0 { w.pairing(0) / e } else { w.pairing(i) }))
}

pub fn folded_demazure_word(
    p: &WeightPolynomial,
    word: &[i64],
    epsilon: u32,
) -> Result<WeightPolynomial> {
    let mut acc = p.clone();
    for &i in word.iter().rev() {
        acc = folded_demazure_op(&acc, i, epsilon)?;
    }
    Ok(acc)
}

/// Whether the weight pairs evenly with the zeroth coroot and equally with
/// every mirrored pair of coroots.
pub fn on_folded_lattice(w: &Weight, epsilon: u32) -> bool {
    if w.pairing(0) % epsilon as i64 != 0 {
        return false;
    }
    let reach = w.eps_support().map(|(i, _)| i.unsigned_abs()).max().unwrap_or(0);
    (1..=reach as i64).all(|i| w.pairing(i) == w.pairing(-i))
}

/// The character of the partial closure at level `n`: the word operators
/// applied to the exponential of `n` times the level weight.
pub fn demazure_character(w: &GrassmannianElement, n: i64) -> Result<WeightPolynomial> {
    let word = w.canonical_word();
    match w.group() {
        Group::Unfolded => {
            Ok(demazure_word(&WeightPolynomial::monomial(Weight::level(n)), &word))
        }
        Group::Folded(epsilon) => {
            let top = Weight::level(n * epsilon as i64);
            folded_demazure_word(&WeightPolynomial::monomial(top), &word, epsilon)
        }
    }
}

fn string_sum(
    p: &WeightPolynomial,
    root: &Weight,
    pairing: impl Fn(&Weight) -> i64,
) -> WeightPolynomial {
    let mut out = WeightPolynomial::zero();
    for (w, c) in p.terms() {
        let m = pairing(w);
        if m >= 0 {
            for k in 0..=m {
                out.add_term(w.clone() - root.clone() * k, c.clone());
            }
        } else {
            for k in 1..-m {
                out.add_term(w.clone() + root.clone() * k, -c.clone());
            }
        }
    }
    out
}

/// Ambient ring of a truncated series: variable counts and the total
/// degree kept.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vars {
    pub x: usize,
    pub y: usize,
    pub cap: u32,
}

/// Which family of generators a symmetric-function call runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    X,
    Y,
    /// Diagonal variables `z_i = x_i y_i`.
    Z,
}

impl Vars {
    pub fn zero(self) -> TruncatedSeries {
        TruncatedSeries { vars: self, terms: BTreeMap::new() }
    }

    pub fn one(self) -> TruncatedSeries {
        let mut s = self.zero();
        s.add_term((vec![0; self.x], vec![0; self.y]), BigInt::one());
        s
    }

    /// The generator `x_i`, 1-based.
    pub fn x(self, i: usize) -> TruncatedSeries {
        assert!((1..=self.x).contains(&i), "x index out of range");
        let mut xe = vec![0; self.x];
        xe[i - 1] = 1;
        let mut s = self.zero();
        s.add_term((xe, vec![0; self.y]), BigInt::one());
        s
    }

    /// The generator `y_j`, 1-based.
    pub fn y(self, j: usize) -> TruncatedSeries {
        assert!((1..=self.y).contains(&j), "y index out of range");
        let mut ye = vec![0; self.y];
        ye[j - 1] = 1;
        let mut s = self.zero();
        s.add_term((vec![0; self.x], ye), BigInt::one());
        s
    }

    /// The diagonal generator `z_i = x_i y_i`.
    pub fn z(self, i: usize) -> TruncatedSeries {
        &self.x(i) * &self.y(i)
    }

    /// The first `count` generators of the family.
    pub fn gens(self, family: Family, count: usize) -> Result<Vec<TruncatedSeries>> {
        let have = match family {
            Family::X => self.x,
            Family::Y => self.y,
            Family::Z => self.x.min(self.y),
        };
        if count > have {
            return Err(Error::NotEnoughVariables(count));
        }
        Ok((1..=count)
            .map(|i| match family {
                Family::X => self.x(i),
                Family::Y => self.y(i),
                Family::Z => self.z(i),
            })
            .collect())
    }
}

type Monomial = (Vec<u32>, Vec<u32>);

fn degree(xe: &[u32], ye: &[u32]) -> u32 {
    xe.iter().chain(ye).sum()
}

/// A polynomial truncated at a total degree, with arbitrary-precision
/// integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SeriesRaw", into = "SeriesRaw")]
pub struct TruncatedSeries {
    vars: Vars,
    terms: BTreeMap<Monomial, BigInt>,
}

/// Wire form: exponent vectors concatenate the `x` and `y` exponents, and
/// coefficients travel as decimal strings.
#[derive(Serialize, Deserialize)]
struct SeriesRaw {
    vars: Vars,
    terms: Vec<(Vec<u32>, String)>,
}

impl TryFrom<SeriesRaw> for TruncatedSeries {
    type Error = Error;
    fn try_from(raw: SeriesRaw) -> Result<Self> {
        let mut out = raw.vars.zero();
        for (exps, digits) in raw.terms {
            if exps.len() != raw.vars.x + raw.vars.y {
                return Err(Error::BadSeries("exponent vector has the wrong length"));
            }
            let coeff: BigInt =
                digits.parse().map_err(|_| Error::BadSeries("unreadable coefficient"))?;
            let (xe, ye) = exps.split_at(raw.vars.x);
            if degree(xe, ye) > raw.vars.cap {
                return Err(Error::BadSeries("term exceeds the degree cap"));
            }
            out.add_term((xe.to_vec(), ye.to_vec()), coeff);
        }
        Ok(out)
    }
}

impl From<TruncatedSeries> for SeriesRaw {
    fn from(s: TruncatedSeries) -> SeriesRaw {
        SeriesRaw {
            vars: s.vars,
            terms: s
                .terms
                .into_iter()
                .map(|((xe, ye), c)| {
                    (xe.into_iter().chain(ye).collect(), c.to_string())
                })
                .collect(),
        }
    }
}

impl TruncatedSeries {
    pub fn vars(&self) -> Vars {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, xe: &[u32], ye: &[u32]) -> BigInt {
        self.terms.get(&(xe.to_vec(), ye.to_vec())).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, mono: Monomial, coeff: BigInt) {
        debug_assert_eq!(mono.0.len(), self.vars.x);
        debug_assert_eq!(mono.1.len(), self.vars.y);
        debug_assert!(degree(&mono.0, &mono.1) <= self.vars.cap);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scaled(&self, by: &BigInt) -> TruncatedSeries {
        let mut out = self.vars.zero();
        if by.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c * by);
        }
        out
    }

    /// All powers of a series with no constant term: `1 + u + u² + ⋯`,
    /// truncated by the cap.
    pub fn geometric(&self) -> TruncatedSeries {
        assert!(
            self.coeff(&vec![0; self.vars.x], &vec![0; self.vars.y]).is_zero(),
            "geometric sums need a vanishing constant term"
        );
        let mut out = self.vars.one();
        let mut power = self.vars.one();
        loop {
            power = &power * self;
            if power.is_zero() {
                return out;
            }
            out = &out + &power;
        }
    }
}

impl std::ops::Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.vars, rhs.vars, "series from different ambient rings");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.vars, rhs.vars, "series from different ambient rings");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl std::ops::Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.vars, rhs.vars, "series from different ambient rings");
        let vars = self.vars;
        let left: Vec<(&Monomial, &BigInt)> = self.terms.iter().collect();
        let blocks: Vec<BTreeMap<Monomial, BigInt>> = left
            .par_chunks(64)
            .map(|chunk| {
                let mut local: BTreeMap<Monomial, BigInt> = BTreeMap::new();
                for ((axe, aye), ac) in chunk {
                    for ((bxe, bye), bc) in &rhs.terms {
                        let xe: Vec<u32> =
                            axe.iter().zip(bxe).map(|(a, b)| a + b).collect();
                        let ye: Vec<u32> =
                            aye.iter().zip(bye).map(|(a, b)| a + b).collect();
                        if degree(&xe, &ye) > vars.cap {
                            continue;
                        }
                        *local.entry((xe, ye)).or_default() += *ac * bc;
                    }
                }
                local
            })
            .collect();
        let mut out = vars.zero();
        for block in blocks {
            for (m, c) in block {
                out.add_term(m, c);
            }
        }
        out
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((xe, ye), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &e) in xe.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{}", i + 1, e)?,
                }
            }
            for (j, &e) in ye.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*y{}", j + 1)?,
                    _ => write!(f, "*y{}^{}", j + 1, e)?,
                }
            }
        }
        Ok(())
    }
}

/// Complete homogeneous sum of degree `k` over the given generators:
/// zero for negative `k` or when `k > 0` with no generators, one for
/// `k = 0`.
pub fn complete_h(k: i64, gens: &[TruncatedSeries], vars: Vars) -> TruncatedSeries {
    if k < 0 {
        return vars.zero();
    }
    let k = k as usize;
    let mut h = vec![vars.zero(); k + 1];
    h[0] = vars.one();
    for g in gens {
        // In-place update walks degrees upward so h[d-1] is already the
        // version including g.
        for d in 1..=k {
            h[d] = &h[d] + &(g * &h[d - 1]);
        }
    }
    h.swap_remove(k)
}

/// Flagged Schur polynomial of a skew shape: the row-flagged determinant
/// of complete homogeneous sums, cross-checked against the sum over
/// semistandard fillings whose row `i` entries stay at most `flags[i-1]`.
pub fn flagged_schur(
    shape: &SkewShape,
    flags: &[u32],
    family: Family,
    vars: Vars,
) -> Result<TruncatedSeries> {
    let n = shape.outer().len();
    if flags.len() < n {
        return Err(Error::ShapeMismatch);
    }
    if flags.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::BadFlags("row flags must be weakly increasing"));
    }
    let lambda = shape.outer();
    let mu = shape.inner();
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        let gens = vars.gens(family, flags[i - 1] as usize)?;
        let mut row = Vec::with_capacity(n);
        for j in 1..=n {
            let k = lambda.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64;
            row.push(complete_h(k, &gens, vars));
        }
        rows.push(row);
    }
    let det = determinant(&rows, vars);
    let by_tableaux = tableau_sum(shape, flags, Orientation::Normal, family, vars)?;
    assert_eq!(det, by_tableaux, "determinant and filling sum disagree");
    Ok(det)
}

/// Column-flagged Schur polynomial of a straight shape over strictly
/// decreasing variable counts.
pub fn s_hat(nu: &Partition, alpha: &[u32], family: Family, vars: Vars) -> Result<TruncatedSeries> {
    if alpha.iter().any(|&a| a == 0) || alpha.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::BadFrobenius("coordinates must be strictly decreasing"));
    }
    let n = nu.len();
    if n > alpha.len() {
        return Err(Error::NotEnoughVariables(n));
    }
    let columns: Vec<Vec<TruncatedSeries>> = (1..=n)
        .map(|j| vars.gens(family, alpha[j - 1] as usize))
        .collect::<Result<_>>()?;
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        let mut row = Vec::with_capacity(n);
        for j in 1..=n {
            let k = nu.part(i) as i64 - i as i64 + j as i64;
            row.push(complete_h(k, &columns[j - 1], vars));
        }
        rows.push(row);
    }
    Ok(determinant(&rows, vars))
}

/// Sum over flagged semistandard fillings, each contributing the product
/// of its entries' generators.  Flags are indexed by structural row.
pub fn tableau_sum(
    shape: &SkewShape,
    flags: &[u32],
    orientation: Orientation,
    family: Family,
    vars: Vars,
) -> Result<TruncatedSeries> {
    let max_flag = flags.iter().copied().max().unwrap_or(0) as usize;
    // Probe the family for range errors even when no cell reaches it.
    vars.gens(family, max_flag)?;
    let mut out = vars.zero();
    for t in tableau::flagged(orientation, Alphabet::Positive, shape, flags)? {
        let mut xe = vec![0u32; vars.x];
        let mut ye = vec![0u32; vars.y];
        for &v in t.word().values() {
            let idx = v as usize - 1;
            match family {
                Family::X => xe[idx] += 1,
                Family::Y => ye[idx] += 1,
                Family::Z => {
                    xe[idx] += 1;
                    ye[idx] += 1;
                }
            }
        }
        if degree(&xe, &ye) <= vars.cap {
            out.add_term((xe, ye), BigInt::one());
        }
    }
    Ok(out)
}

fn determinant(rows: &[Vec<TruncatedSeries>], vars: Vars) -> TruncatedSeries {
    let n = rows.len();
    if n == 0 {
        return vars.one();
    }
    // Cofactor expansion along the first row; the matrices here are tiny.
    let mut out = vars.zero();
    let mut cols: Vec<usize> = (0..n).collect();
    fn expand(
        rows: &[Vec<TruncatedSeries>],
        depth: usize,
        cols: &mut Vec<usize>,
        sign: bool,
        acc: &TruncatedSeries,
        out: &mut TruncatedSeries,
    ) {
        if cols.is_empty() {
            *out = if sign { &*out - acc } else { &*out + acc };
            return;
        }
        for k in 0..cols.len() {
            let j = cols.remove(k);
            let entry = &rows[depth][j];
            if !entry.is_zero() {
                let next = acc * entry;
                if !next.is_zero() {
                    expand(rows, depth + 1, cols, sign ^ (k % 2 == 1), &next, out);
                }
            }
            cols.insert(k, j);
        }
    }
    expand(rows, 0, &mut cols, false, &vars.one(), &mut out);
    out
}

/// Both sides of the flagged identity for `w`: the support sum of
/// geometric factors on the left and the paired column-flagged Schur sum
/// on the right.  Variable counts must cover the flags.
pub fn cauchy_sides(
    w: &GrassmannianElement,
    vars: Vars,
) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let flags = w.flags();
    let cells: Vec<(u32, u32)> = (1..=vars.x as u32)
        .flat_map(|i| (1..=vars.y as u32).map(move |j| (i, j)))
        .collect();
    let factors: Vec<TruncatedSeries> = cells
        .iter()
        .map(|&(i, j)| {
            let t = &vars.x(i as usize) * &vars.y(j as usize);
            &t * &t.geometric()
        })
        .collect();
    let mut lhs = vars.zero();
    let mut chosen = Vec::new();
    support_sum(w, &cells, &factors, 0, vars.cap, &vars.one(), &mut chosen, &mut lhs);

    let mut rhs = vars.zero();
    for nu in bounded_partitions(vars.cap / 2, flags.d) {
        let left = s_hat(&nu, &flags.alpha, Family::X, vars)?;
        let right = s_hat(&nu, &flags.beta, Family::Y, vars)?;
        rhs = &rhs + &(&left * &right);
    }
    Ok((lhs, rhs))
}

#[allow(clippy::too_many_arguments)]
fn support_sum(
    w: &GrassmannianElement,
    cells: &[(u32, u32)],
    factors: &[TruncatedSeries],
    from: usize,
    budget: u32,
    acc: &TruncatedSeries,
    chosen: &mut Vec<(u32, u32)>,
    out: &mut TruncatedSeries,
) {
    if fits(w, chosen) {
        *out = &*out + acc;
    }
    for k in from..cells.len() {
        // Every surviving factor costs at least two degrees.
        if budget < 2 {
            return;
        }
        chosen.push(cells[k]);
        let next = acc * &factors[k];
        if !next.is_zero() {
            support_sum(w, cells, factors, k + 1, budget - 2, &next, chosen, out);
        }
        chosen.pop();
    }
}

fn fits(w: &GrassmannianElement, cells: &[(u32, u32)]) -> bool {
    if cells.is_empty() {
        return true;
    }
    let support = Support::new(cells.iter().copied()).expect("grid cells are positive");
    w.shape().contains(&support.profile())
}

/// Both sides of the folded identity: symmetric supports with diagonal
/// factors in `z_i^ε` on the left, column-flagged Schur sums over shapes
/// with parts divisible by `ε` on the right.
pub fn symmetric_cauchy_sides(
    w: &GrassmannianElement,
    vars: Vars,
) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let Group::Folded(epsilon) = w.group() else {
        return Err(Error::GroupMismatch);
    };
    let flags = w.flags();
    let side = vars.x.min(vars.y) as u32;
    let uppers: Vec<(u32, u32)> =
        (1..=side).flat_map(|i| (i..=side).map(move |j| (i, j))).collect();
    let factors: Vec<TruncatedSeries> = uppers
        .iter()
        .map(|&(i, j)| {
            let t = if i == j {
                let mut power = vars.one();
                for _ in 0..epsilon {
                    power = &power * &vars.z(i as usize);
                }
                power
            } else {
                &vars.z(i as usize) * &vars.z(j as usize)
            };
            &t * &t.geometric()
        })
        .collect();
    let costs: Vec<u32> =
        uppers.iter().map(|&(i, j)| if i == j { 2 * epsilon } else { 4 }).collect();
    let mut lhs = vars.zero();
    let mut chosen = Vec::new();
    symmetric_support_sum(
        w, &uppers, &factors, &costs, 0, vars.cap, &vars.one(), &mut chosen, &mut lhs,
    );

    let mut rhs = vars.zero();
    for nu in bounded_partitions(vars.cap / 2, flags.d) {
        if nu.parts().iter().any(|&p| p % epsilon != 0) {
            continue;
        }
        rhs = &rhs + &s_hat(&nu, &flags.alpha, Family::Z, vars)?;
    }
    Ok((lhs, rhs))
}

#[allow(clippy::too_many_arguments)]
fn symmetric_support_sum(
    w: &GrassmannianElement,
    uppers: &[(u32, u32)],
    factors: &[TruncatedSeries],
    costs: &[u32],
    from: usize,
    budget: u32,
    acc: &TruncatedSeries,
    chosen: &mut Vec<(u32, u32)>,
    out: &mut TruncatedSeries,
) {
    let mirrored: Vec<(u32, u32)> =
        chosen.iter().flat_map(|&(i, j)| [(i, j), (j, i)]).collect();
    if fits(w, &mirrored) {
        *out = &*out + acc;
    }
    for k in from..uppers.len() {
        if budget < costs[k] {
            continue;
        }
        chosen.push(uppers[k]);
        let next = acc * &factors[k];
        if !next.is_zero() {
            symmetric_support_sum(
                w,
                uppers,
                factors,
                costs,
                k + 1,
                budget - costs[k],
                &next,
                chosen,
                out,
            );
        }
        chosen.pop();
    }
}
