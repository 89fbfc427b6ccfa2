//! The crystal of finitely supported nonnegative integer matrices.
//!
//! A matrix `A = (a_{ij})` with rows and columns indexed from 1 encodes the
//! multiset of biletters `(-i^v, j)` with multiplicity `a_{ij}`. Listing that
//! multiset in column-major order (columns ascending, dual letters descending
//! within a column) gives the pair of words `(i, j)`; row-major order (dual
//! letters ascending, columns descending within a row) gives `(k, l)`.
//! Negative-index operators act on the word `i`, positive ones on `l`, and
//! the zero operators add or remove a unit at the corner:
//! raising at 0 needs `a_{11} > 0`, lowering at 0 always succeeds, so
//! `phi_0` can be negative and the crystal is not seminormal at 0.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::crystal::{Alphabet, Dir, Weight, Word};
use crate::shapes::Support;
use crate::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SparseMatrix {
    entries: BTreeMap<(u32, u32), u64>,
}

impl SparseMatrix {
    pub fn zero() -> Self {
        SparseMatrix::default()
    }

    pub fn new(entries: impl IntoIterator<Item = ((u32, u32), u64)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for ((i, j), a) in entries {
            if i == 0 || j == 0 {
                return Err(Error::BadMatrixEntry);
            }
            if a > 0 {
                *map.entry((i, j)).or_insert(0) += a;
            }
        }
        Ok(SparseMatrix { entries: map })
    }

    /// Unit matrix with a single 1 at `(i, j)`.
    pub fn unit(i: u32, j: u32) -> Self {
        SparseMatrix::new([((i, j), 1)]).expect("unit coordinates are positive")
    }

    pub fn from_dense(rows: &[Vec<u64>]) -> Result<Self> {
        SparseMatrix::new(rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, &a)| ((i as u32 + 1, j as u32 + 1), a))
        }))
    }

    pub fn get(&self, i: u32, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total of all entries.
    pub fn sum(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        self.entries.iter().map(|(&c, &a)| (c, a))
    }

    pub fn max_row(&self) -> u32 {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn max_col(&self) -> u32 {
        self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    pub fn support(&self) -> Support {
        Support::new(self.entries.keys().copied()).expect("stored coordinates are positive")
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix {
            entries: self.entries.iter().map(|(&(i, j), &a)| ((j, i), a)).collect(),
        }
    }

    fn shifted(&self, i: u32, j: u32, delta: i64) -> Option<SparseMatrix> {
        let mut entries = self.entries.clone();
        let cur = self.get(i, j) as i64;
        let new = cur + delta;
        if new < 0 {
            return None;
        }
        if new == 0 {
            entries.remove(&(i, j));
        } else {
            entries.insert((i, j), new as u64);
        }
        Some(SparseMatrix { entries })
    }

    pub fn to_biword(&self, kind: BiwordKind) -> Biword {
        let mut pairs: Vec<(u32, u32)> = self
            .entries
            .iter()
            .flat_map(|(&(i, j), &a)| std::iter::repeat((i, j)).take(a as usize))
            .collect();
        pairs.sort_by_key(|&(i, j)| kind.key(i, j));
        Biword { kind, pairs }
    }

    pub fn weight(&self) -> Weight {
        let mut w = Weight::zero();
        for (&(i, j), &a) in &self.entries {
            w += (Weight::unit(j as i64) - Weight::unit(-(i as i64))) * a as i64;
        }
        w
    }

    /// Raise count at index `i`; for `i = 0` this is the corner entry.
    pub fn eps(&self, i: i64) -> i64 {
        if i == 0 {
            self.get(1, 1) as i64
        } else if i < 0 {
            self.to_biword(BiwordKind::ColumnMajor).row_word().eps(i) as i64
        } else {
            self.to_biword(BiwordKind::RowMajor).col_word().eps(i) as i64
        }
    }

    pub fn phi(&self, i: i64) -> i64 {
        if i == 0 {
            self.weight().pairing(0) + self.eps(0)
        } else if i < 0 {
            self.to_biword(BiwordKind::ColumnMajor).row_word().phi(i) as i64
        } else {
            self.to_biword(BiwordKind::RowMajor).col_word().phi(i) as i64
        }
    }

    pub fn apply(&self, i: i64, dir: Dir) -> Option<SparseMatrix> {
        if i == 0 {
            return match dir {
                Dir::Raise => self.shifted(1, 1, -1),
                Dir::Lower => self.shifted(1, 1, 1),
            };
        }
        let kind = if i < 0 { BiwordKind::ColumnMajor } else { BiwordKind::RowMajor };
        let bw = self.to_biword(kind);
        let word = if i < 0 { bw.row_word() } else { bw.col_word() };
        let (new, pos) = word.apply_at(i, dir)?;
        let mut pairs = bw.pairs;
        if i < 0 {
            pairs[pos].0 = (-new.values()[pos]) as u32;
        } else {
            pairs[pos].1 = new.values()[pos] as u32;
        }
        Some(SparseMatrix::new(pairs.into_iter().map(|c| (c, 1)))
            .expect("biword coordinates stay positive"))
    }

    /// True when every raising operator annihilates, which happens only for
    /// the zero matrix.
    pub fn is_highest(&self) -> bool {
        if self.eps(0) > 0 {
            return false;
        }
        let rows = self.max_row() as i64;
        let cols = self.max_col() as i64;
        (1..rows).all(|p| self.eps(-p) == 0) && (1..cols).all(|i| self.eps(i) == 0)
    }

    /// Everything reachable from the zero matrix by lowering operators with
    /// indices in `window`, keeping the entry total at most `sum_bound`.
    pub fn closure_from_zero(
        window: std::ops::RangeInclusive<i64>,
        sum_bound: u64,
    ) -> BTreeSet<SparseMatrix> {
        let indices: Vec<i64> = window.collect();
        let mut seen = BTreeSet::from([SparseMatrix::zero()]);
        let mut frontier: Vec<SparseMatrix> = seen.iter().cloned().collect();
        while !frontier.is_empty() {
            let next: BTreeSet<SparseMatrix> = frontier
                .par_iter()
                .flat_map_iter(|a| {
                    indices.iter().filter_map(|&i| {
                        a.apply(i, Dir::Lower).filter(|b| b.sum() <= sum_bound)
                    })
                })
                .collect();
            frontier = next.into_iter().filter(|b| seen.insert(b.clone())).collect();
        }
        seen
    }
}

impl fmt::Display for SparseMatrix {
    /// Dense layout over the bounding box, rows separated by newlines.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.max_row().max(1);
        let cols = self.max_col().max(1);
        let width = self.entries.values().map(|a| a.to_string().len()).max().unwrap_or(1);
        for i in 1..=rows {
            if i > 1 {
                writeln!(f)?;
            }
            let line: Vec<String> =
                (1..=cols).map(|j| format!("{:>width$}", self.get(i, j))).collect();
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for SparseMatrix {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw<'a> {
            entries: Vec<(&'a u32, &'a u32, &'a u64)>,
        }
        let entries = self.entries.iter().map(|((i, j), a)| (i, j, a)).collect();
        Raw { entries }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for SparseMatrix {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            entries: Vec<(u32, u32, u64)>,
        }
        let raw = Raw::deserialize(de)?;
        SparseMatrix::new(raw.entries.into_iter().map(|(i, j, a)| ((i, j), a)))
            .map_err(|e| de::Error::custom(e.to_string()))
    }
}

/// The two sorted listings of the biletter multiset of a matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BiwordKind {
    /// Columns ascending; within a column, dual letters descending.
    ColumnMajor,
    /// Dual letters ascending; within a row, columns descending.
    RowMajor,
}

impl BiwordKind {
    fn key(self, i: u32, j: u32) -> (u32, i64) {
        match self {
            BiwordKind::ColumnMajor => (j, -(i as i64)),
            BiwordKind::RowMajor => (i, -(j as i64)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Biword {
    kind: BiwordKind,
    /// `(i, j)` encodes the biletter `(-i^v, j)`.
    pairs: Vec<(u32, u32)>,
}

impl Biword {
    pub fn new(kind: BiwordKind, pairs: Vec<(u32, u32)>) -> Result<Self> {
        if pairs.iter().any(|&(i, j)| i == 0 || j == 0) {
            return Err(Error::BadMatrixEntry);
        }
        if pairs.windows(2).any(|w| kind.key(w[0].0, w[0].1) > kind.key(w[1].0, w[1].1)) {
            return Err(Error::UnsortedBiword);
        }
        Ok(Biword { kind, pairs })
    }

    pub fn kind(&self) -> BiwordKind {
        self.kind
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The word of dual letters.
    pub fn row_word(&self) -> Word {
        Word::new(
            Alphabet::NegativeDual,
            self.pairs.iter().map(|&(i, _)| -(i as i64)).collect(),
        )
        .expect("row indices are positive")
    }

    /// The word of column letters.
    pub fn col_word(&self) -> Word {
        Word::new(Alphabet::Positive, self.pairs.iter().map(|&(_, j)| j as i64).collect())
            .expect("column indices are positive")
    }

    pub fn matrix(&self) -> SparseMatrix {
        SparseMatrix::new(self.pairs.iter().map(|&c| (c, 1)))
            .expect("pair coordinates are positive")
    }
}

/// A symmetric matrix with diagonal entries divisible by the fold parameter,
/// carried by the composite operators: at index 0 the corner operator applied
/// `epsilon` times, at `i > 0` the pair of operators at `i` and `-i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "FoldedRaw", into = "FoldedRaw")]
pub struct FoldedMatrix {
    base: SparseMatrix,
    epsilon: u32,
}

#[derive(Serialize, Deserialize)]
struct FoldedRaw {
    base: SparseMatrix,
    epsilon: u32,
}

impl TryFrom<FoldedRaw> for FoldedMatrix {
    type Error = Error;
    fn try_from(raw: FoldedRaw) -> Result<Self> {
        FoldedMatrix::new(raw.base, raw.epsilon)
    }
}

impl From<FoldedMatrix> for FoldedRaw {
    fn from(m: FoldedMatrix) -> FoldedRaw {
        FoldedRaw { base: m.base, epsilon: m.epsilon }
    }
}

impl FoldedMatrix {
    pub fn new(base: SparseMatrix, epsilon: u32) -> Result<Self> {
        if !(1..=2).contains(&epsilon) {
            return Err(Error::BadFoldParameter);
        }
        let symmetric = base.entries().all(|((i, j), a)| base.get(j, i) == a);
        let diagonal = (1..=base.max_row()).all(|i| base.get(i, i) % epsilon as u64 == 0);
        if !symmetric || !diagonal {
            return Err(Error::NotFolded(epsilon));
        }
        Ok(FoldedMatrix { base, epsilon })
    }

    pub fn zero(epsilon: u32) -> Result<Self> {
        FoldedMatrix::new(SparseMatrix::zero(), epsilon)
    }

    pub fn base(&self) -> &SparseMatrix {
        &self.base
    }

    pub fn epsilon(&self) -> u32 {
        self.epsilon
    }

    pub fn weight(&self) -> Weight {
        self.base.weight()
    }

    pub fn apply(&self, i: i64, dir: Dir) -> Option<FoldedMatrix> {
        assert!(i >= 0, "folded operators are indexed by nonnegative integers");
        let mut m = self.base.clone();
        if i == 0 {
            for _ in 0..self.epsilon {
                m = m.apply(0, dir)?;
            }
        } else {
            m = m.apply(i, dir)?.apply(-i, dir)?;
        }
        let folded = FoldedMatrix::new(m, self.epsilon);
        debug_assert!(folded.is_ok(), "composite operators preserve the fold");
        folded.ok()
    }

    /// String length toward the highest weight; at index 0 it counts
    /// applications of the composite operator.
    pub fn eps(&self, i: i64) -> i64 {
        if i == 0 {
            self.base.eps(0) / self.epsilon as i64
        } else {
            self.base.eps(i)
        }
    }

    pub fn phi(&self, i: i64) -> i64 {
        if i == 0 {
            self.weight().pairing(0) / self.epsilon as i64 + self.eps(0)
        } else {
            self.base.phi(i)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::route;

    /// The running 3x3 example used across the modules.
    pub(crate) fn example_3x3() -> SparseMatrix {
        SparseMatrix::from_dense(&[vec![1, 0, 1], vec![2, 1, 0], vec![0, 2, 0]]).unwrap()
    }

    /// Independent row/column bracketing rule for the one-sided operators.
    fn local_apply(a: &SparseMatrix, i: i64, dir: Dir) -> Option<SparseMatrix> {
        assert!(i != 0);
        let (factors, cells): (Vec<(u32, u32)>, Vec<((u32, u32), (u32, u32))>) = if i > 0 {
            let i = i as u32;
            (1..=a.max_row().max(1))
                .map(|r| {
                    (
                        (a.get(r, i + 1) as u32, a.get(r, i) as u32),
                        (((r, i + 1), (r, i))),
                    )
                })
                .unzip()
        } else {
            let p = (-i) as u32;
            (1..=a.max_col().max(1))
                .map(|c| {
                    (
                        (a.get(p + 1, c) as u32, a.get(p, c) as u32),
                        (((p + 1, c), (p, c))),
                    )
                })
                .unzip()
        };
        let routing = route(factors);
        let idx = match dir {
            Dir::Raise => routing.raise_at,
            Dir::Lower => routing.lower_at,
        }?;
        let (hi, lo) = cells[idx];
        // Raising moves one unit from the eps cell to the phi cell.
        let (from, to) = match dir {
            Dir::Raise => (hi, lo),
            Dir::Lower => (lo, hi),
        };
        a.shifted(from.0, from.1, -1)?.shifted(to.0, to.1, 1)
    }

    fn sample(max: u32, sum: u64) -> Vec<SparseMatrix> {
        let mut out = vec![SparseMatrix::zero()];
        for i in 1..=max {
            for j in 1..=max {
                out = out
                    .into_iter()
                    .flat_map(|m| {
                        (0..=(sum - m.sum())).map(move |a| {
                            let mut m = m.clone();
                            if a > 0 {
                                m = SparseMatrix::new(
                                    m.entries().chain([((i, j), a)]),
                                )
                                .unwrap();
                            }
                            m
                        })
                    })
                    .collect();
            }
        }
        out
    }

    #[test]
    fn biwords_of_the_running_example() {
        let a = example_3x3();
        let omega = a.to_biword(BiwordKind::ColumnMajor);
        assert_eq!(omega.row_word().values(), &[-2, -2, -1, -3, -3, -2, -1]);
        assert_eq!(omega.col_word().values(), &[1, 1, 1, 2, 2, 2, 3]);
        let omega_prime = a.to_biword(BiwordKind::RowMajor);
        assert_eq!(omega_prime.row_word().values(), &[-1, -1, -2, -2, -2, -3, -3]);
        assert_eq!(omega_prime.col_word().values(), &[3, 1, 2, 1, 1, 2, 2]);
        assert_eq!(omega.matrix(), a);
        assert_eq!(omega_prime.matrix(), a);
    }

    #[test]
    fn biword_rejects_disorder() {
        assert!(Biword::new(BiwordKind::ColumnMajor, vec![(1, 1), (2, 1)]).is_err());
        assert!(Biword::new(BiwordKind::ColumnMajor, vec![(2, 1), (1, 1), (1, 3)]).is_ok());
        assert!(Biword::new(BiwordKind::RowMajor, vec![(1, 3), (1, 1), (2, 2)]).is_ok());
        assert!(Biword::new(BiwordKind::RowMajor, vec![(1, 1), (1, 3)]).is_err());
        assert!(Biword::new(BiwordKind::RowMajor, vec![(0, 1)]).is_err());
    }

    #[test]
    fn zero_matrix_corner_operators() {
        let z = SparseMatrix::zero();
        assert_eq!(z.apply(0, Dir::Raise), None);
        assert_eq!(z.apply(0, Dir::Lower).unwrap(), SparseMatrix::unit(1, 1));
        assert_eq!(z.eps(0), 0);
        assert_eq!(z.phi(0), 0);
        assert_eq!(z.weight(), Weight::zero());
        assert!(z.is_highest());
    }

    #[test]
    fn corner_phi_can_be_negative() {
        // A unit away from the corner leaves nothing to raise while the
        // weight already pairs negatively with the zeroth coroot.
        let a = SparseMatrix::unit(1, 2);
        assert_eq!(a.eps(0), 0);
        assert_eq!(a.phi(0), -1);
        assert!(a.apply(0, Dir::Lower).is_some());
        assert_eq!(a.apply(0, Dir::Raise), None);
    }

    #[test]
    fn weight_counts_rows_and_columns() {
        let wt = example_3x3().weight();
        for (i, c) in [(-1, -2), (-2, -3), (-3, -2), (1, 3), (2, 3), (3, 1)] {
            assert_eq!(wt.eps_coeff(i), c, "coefficient of eps_{i}");
        }
        assert_eq!(wt.level_coeff(), 0);
    }

    #[test]
    fn corner_raise_on_displayed_4x4() {
        let a = SparseMatrix::from_dense(&[
            vec![1, 0, 1, 0],
            vec![0, 0, 0, 1],
            vec![1, 0, 0, 0],
            vec![1, 0, 1, 0],
        ])
        .unwrap();
        let raised = a.apply(0, Dir::Raise).unwrap();
        assert_eq!(raised.get(1, 1), 0);
        assert_eq!(raised.sum(), a.sum() - 1);
        let lowered = a.apply(0, Dir::Lower).unwrap();
        assert_eq!(lowered.get(1, 1), 2);
    }

    #[test]
    fn biword_action_matches_local_rule() {
        for a in sample(3, 3) {
            for i in (-3..=3).filter(|&i| i != 0) {
                for dir in [Dir::Raise, Dir::Lower] {
                    assert_eq!(
                        a.apply(i, dir),
                        local_apply(&a, i, dir),
                        "matrix {a:?} at {i}"
                    );
                }
            }
        }
    }

    #[test]
    fn only_zero_is_highest() {
        for a in sample(3, 3) {
            assert_eq!(a.is_highest(), a.is_zero(), "matrix {a:?}");
        }
    }

    #[test]
    fn small_closure_reaches_every_bounded_matrix() {
        let closure = SparseMatrix::closure_from_zero(-2..=2, 2);
        let expected: BTreeSet<SparseMatrix> = sample(3, 2).into_iter().collect();
        assert_eq!(closure.len(), 55);
        assert_eq!(closure, expected);
    }

    #[test]
    fn serde_sorted_entries() {
        let a = example_3x3();
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(
            json,
            r#"{"entries":[[1,1,1],[1,3,1],[2,1,2],[2,2,1],[3,2,2]]}"#
        );
        let back: SparseMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn folded_corner_lowering() {
        for epsilon in [1, 2] {
            let z = FoldedMatrix::zero(epsilon).unwrap();
            let down = z.apply(0, Dir::Lower).unwrap();
            assert_eq!(down.base().get(1, 1), epsilon as u64);
            assert_eq!(down.apply(0, Dir::Raise).unwrap(), z);
        }
    }

    #[test]
    fn folded_invariants_on_symmetric_sample() {
        for epsilon in [1u32, 2] {
            let sample: Vec<FoldedMatrix> = sample(3, 4)
                .into_iter()
                .filter_map(|m| FoldedMatrix::new(m, epsilon).ok())
                .collect();
            assert!(sample.len() > 1);
            for m in &sample {
                for i in 0..=3 {
                    for dir in [Dir::Raise, Dir::Lower] {
                        if let Some(next) = m.apply(i, dir) {
                            let back = next.apply(i, flip(dir)).unwrap();
                            assert_eq!(&back, m);
                        }
                    }
                    // Seminormality away from 0 and the shifted rule at 0.
                    assert_eq!(
                        m.phi(i) - m.eps(i),
                        folded_pairing(m, i),
                        "matrix {m:?} at {i}"
                    );
                }
            }
        }
    }

    fn flip(dir: Dir) -> Dir {
        match dir {
            Dir::Raise => Dir::Lower,
            Dir::Lower => Dir::Raise,
        }
    }

    fn folded_pairing(m: &FoldedMatrix, i: i64) -> i64 {
        if i == 0 {
            m.weight().pairing(0) / m.epsilon() as i64
        } else {
            m.weight().pairing(i)
        }
    }
}
