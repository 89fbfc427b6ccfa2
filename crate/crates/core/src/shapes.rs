//! Partitions, skew shapes, diagonal (Frobenius) coordinates, and finite cell
//! supports with their border-strip peeling.
//!
//! Cells are 1-indexed `(row, column)` pairs in matrix orientation. Diagonal
//! coordinates include the diagonal cell on both sides: `alpha[k]` counts the
//! cells of column `k+1` at or below the diagonal and `beta[k]` counts the
//! cells of row `k+1` at or right of it.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers; the empty partition is
/// allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadPartition);
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from a sequence that may carry trailing zeros.
    pub fn from_lengths(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total number of cells.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The `i`-th part, 1-indexed; zero beyond the last part.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 || i > self.parts.len() {
            0
        } else {
            self.parts[i - 1]
        }
    }

    /// The first (largest) part.
    pub fn first(&self) -> u32 {
        self.part(1)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.len()).all(|i| self.part(i) >= other.part(i))
    }

    pub fn has_cell(&self, row: u32, col: u32) -> bool {
        row >= 1 && col >= 1 && self.part(row as usize) >= col
    }

    /// Cells in row-major order, 1-indexed.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i as u32 + 1, j)))
    }

    pub fn conjugate(&self) -> Partition {
        let mut cols = Vec::new();
        for j in 1..=self.first() {
            cols.push(self.parts.iter().filter(|&&p| p >= j).count() as u32);
        }
        Partition { parts: cols }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Length of the main diagonal.
    pub fn diagonal_length(&self) -> usize {
        (1..=self.parts.len())
            .take_while(|&i| self.part(i) >= i as u32)
            .count()
    }

    /// Diagonal coordinates of the shape.
    pub fn frobenius(&self) -> FrobeniusForm {
        let d = self.diagonal_length();
        let conj = self.conjugate();
        let alpha = (1..=d).map(|i| conj.part(i) - i as u32 + 1).collect();
        let beta = (1..=d).map(|i| self.part(i) - i as u32 + 1).collect();
        FrobeniusForm::new(alpha, beta).expect("diagonal coordinates of a partition are strict")
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::from_lengths(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

/// Diagonal coordinates `(alpha | beta)`: strictly decreasing positive column
/// and row counts of equal length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FrobeniusForm {
    alpha: Vec<u32>,
    beta: Vec<u32>,
}

impl FrobeniusForm {
    pub fn new(alpha: Vec<u32>, beta: Vec<u32>) -> Result<Self> {
        if alpha.len() != beta.len() {
            return Err(Error::BadFrobenius("arm and leg lists differ in length"));
        }
        let strict = |v: &[u32]| v.iter().all(|&x| x > 0) && v.windows(2).all(|w| w[0] > w[1]);
        if !strict(&alpha) || !strict(&beta) {
            return Err(Error::BadFrobenius("coordinates must be strictly decreasing"));
        }
        Ok(FrobeniusForm { alpha, beta })
    }

    pub fn alpha(&self) -> &[u32] {
        &self.alpha
    }

    pub fn beta(&self) -> &[u32] {
        &self.beta
    }

    pub fn diagonal_length(&self) -> usize {
        self.alpha.len()
    }

    /// Rebuilds the partition as the union of the hooks described by the
    /// coordinates.
    pub fn decode(&self) -> Partition {
        let d = self.alpha.len();
        let mut rows = Vec::new();
        for i in 1..=d {
            rows.push(self.beta[i - 1] + i as u32 - 1);
        }
        let max_row = self
            .alpha
            .iter()
            .enumerate()
            .map(|(k, &a)| a + k as u32)
            .max()
            .unwrap_or(0);
        for i in (d as u32 + 1)..=max_row {
            let cols = (0..d)
                .filter(|&k| self.alpha[k] + k as u32 >= i)
                .count() as u32;
            rows.push(cols);
        }
        Partition::from_lengths(rows).expect("hook union of strict coordinates is a partition")
    }
}

/// A skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::BadSkewShape);
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    pub fn has_cell(&self, row: u32, col: u32) -> bool {
        self.outer.has_cell(row, col) && !self.inner.has_cell(row, col)
    }

    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.outer.cells().filter(move |&(r, c)| !self.inner.has_cell(r, c))
    }
}

/// A finite set of cells in the quarter plane.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Support {
    cells: BTreeSet<(u32, u32)>,
}

impl Support {
    pub fn new(cells: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let cells: BTreeSet<_> = cells.into_iter().collect();
        if cells.iter().any(|&(r, c)| r == 0 || c == 0) {
            return Err(Error::BadMatrixEntry);
        }
        Ok(Support { cells })
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.cells.iter().copied()
    }

    pub fn contains(&self, cell: (u32, u32)) -> bool {
        self.cells.contains(&cell)
    }

    /// The smallest partition whose diagram contains every cell.
    pub fn hull(&self) -> Partition {
        let max_row = self.cells.iter().map(|&(r, _)| r).max().unwrap_or(0);
        let mut rows = vec![0u32; max_row as usize];
        for &(r, c) in &self.cells {
            let slot = &mut rows[r as usize - 1];
            *slot = (*slot).max(c);
        }
        // Right-justify bottom-up so the hull is a partition.
        for i in (0..rows.len().saturating_sub(1)).rev() {
            rows[i] = rows[i].max(rows[i + 1]);
        }
        Partition::from_lengths(rows).expect("running maxima are weakly decreasing")
    }

    /// The border strip of the hull together with the extremal corner
    /// `(max row, max column)` of the support.
    pub fn border_strip(&self) -> Result<(SkewShape, (u32, u32))> {
        if self.is_empty() {
            return Err(Error::EmptySupport);
        }
        let hull = self.hull();
        let fr = hull.frobenius();
        let corner = (fr.alpha()[0], fr.beta()[0]);
        let inner = if fr.diagonal_length() > 1 {
            FrobeniusForm::new(fr.alpha()[1..].to_vec(), fr.beta()[1..].to_vec())?.decode()
        } else {
            Partition::empty()
        };
        Ok((SkewShape::new(hull, inner)?, corner))
    }

    /// The partition assembled from the corners of iterated strip peeling.
    ///
    /// Peeling removes from the support every cell lying on the current border
    /// strip; the corners so produced strictly decrease in both coordinates.
    pub fn profile(&self) -> Partition {
        let mut rest = self.clone();
        let mut alpha = Vec::new();
        let mut beta = Vec::new();
        while !rest.is_empty() {
            let (strip, (a, b)) = rest.border_strip().expect("nonempty support");
            alpha.push(a);
            beta.push(b);
            rest = Support {
                cells: rest
                    .cells
                    .iter()
                    .copied()
                    .filter(|&(r, c)| !strip.has_cell(r, c))
                    .collect(),
            };
        }
        if alpha.is_empty() {
            return Partition::empty();
        }
        FrobeniusForm::new(alpha, beta)
            .expect("peeled corners strictly decrease")
            .decode()
    }
}

/// All partitions fitting in an `rows x cols` box, the empty one included.
pub fn partitions_in_box(rows: u32, cols: u32) -> Vec<Partition> {
    let mut out = vec![Partition::empty()];
    let mut stack = vec![Vec::<u32>::new()];
    while let Some(cur) = stack.pop() {
        if cur.len() as u32 == rows {
            continue;
        }
        let cap = cur.last().copied().unwrap_or(cols);
        for p in 1..=cap {
            let mut next = cur.clone();
            next.push(p);
            out.push(Partition::new(next.clone()).unwrap());
            stack.push(next);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// All partitions contained in `outer` with at most `max_size` cells and at
/// most `max_len` parts.
pub fn bounded_subpartitions(outer: &Partition, max_size: u32, max_len: usize) -> Vec<Partition> {
    let mut out = vec![Partition::empty()];
    fn rec(
        outer: &Partition,
        row: usize,
        prev: u32,
        left: u32,
        max_len: usize,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row > max_len || row > outer.len() {
            return;
        }
        let cap = prev.min(outer.part(row)).min(left);
        for p in 1..=cap {
            cur.push(p);
            out.push(Partition::new(cur.clone()).unwrap());
            rec(outer, row + 1, p, left - p, max_len, cur, out);
            cur.pop();
        }
    }
    let mut cur = Vec::new();
    rec(outer, 1, u32::MAX, max_size, max_len, &mut cur, &mut out);
    out
}

/// All partitions with at most `max_size` cells and at most `max_len` parts.
pub fn bounded_partitions(max_size: u32, max_len: usize) -> Vec<Partition> {
    let wide = Partition::new(vec![max_size; max_len.min(max_size as usize)]).unwrap_or_default();
    bounded_subpartitions(&wide, max_size, max_len)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent decode: a hook for each diagonal index, unioned cellwise.
    fn decode_by_hooks(alpha: &[u32], beta: &[u32]) -> Partition {
        let mut cells = BTreeSet::new();
        for k in 0..alpha.len() {
            let k1 = k as u32 + 1;
            for i in k1..k1 + alpha[k] {
                cells.insert((i, k1));
            }
            for j in k1..k1 + beta[k] {
                cells.insert((k1, j));
            }
        }
        let support = Support { cells };
        let hull = support.hull();
        // The union of nested hooks is already a Young diagram.
        assert_eq!(
            hull.cells().collect::<BTreeSet<_>>(),
            support.cells.iter().copied().collect::<BTreeSet<_>>()
        );
        hull
    }

    #[test]
    fn partition_basics() {
        assert!(Partition::new(vec![3, 1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        let p = Partition::new(vec![4, 3, 3, 2]).unwrap();
        assert_eq!(p.size(), 12);
        assert_eq!(p.part(5), 0);
        assert_eq!(p.conjugate().parts(), &[4, 4, 3, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn conjugate_matches_cell_transpose() {
        for p in partitions_in_box(4, 4) {
            let transposed: BTreeSet<_> = p.cells().map(|(r, c)| (c, r)).collect();
            let q = p.conjugate();
            assert_eq!(q.cells().collect::<BTreeSet<_>>(), transposed);
        }
    }

    #[test]
    fn frobenius_roundtrip_against_hook_oracle() {
        for p in partitions_in_box(5, 5) {
            if p.is_empty() {
                continue;
            }
            let fr = p.frobenius();
            assert_eq!(fr.decode(), p);
            assert_eq!(decode_by_hooks(fr.alpha(), fr.beta()), p);
        }
    }

    #[test]
    fn frobenius_known_values() {
        // Frozen from the hook-union oracle.
        let p = Partition::new(vec![6, 6, 4, 2, 1]).unwrap();
        let fr = p.frobenius();
        assert_eq!(fr.alpha(), &[5, 3, 1]);
        assert_eq!(fr.beta(), &[6, 5, 2]);
        assert_eq!(decode_by_hooks(&[5, 3, 1], &[6, 5, 2]).parts(), &[6, 6, 4, 2, 1]);

        let f = FrobeniusForm::new(vec![4, 3, 1], vec![4, 2, 1]).unwrap();
        assert_eq!(f.decode().parts(), &[4, 3, 3, 2]);
        assert_eq!(decode_by_hooks(&[4, 3, 1], &[4, 2, 1]).parts(), &[4, 3, 3, 2]);

        // A single cell decodes to a hook.
        let f = FrobeniusForm::new(vec![3], vec![2]).unwrap();
        assert_eq!(f.decode().parts(), &[2, 1, 1]);
    }

    #[test]
    fn frobenius_rejects_bad_coordinates() {
        assert!(FrobeniusForm::new(vec![2, 2], vec![2, 1]).is_err());
        assert!(FrobeniusForm::new(vec![2], vec![2, 1]).is_err());
        assert!(FrobeniusForm::new(vec![1, 0], vec![2, 1]).is_err());
    }

    #[test]
    fn hull_of_scattered_support() {
        let s = Support::new([(1, 1), (1, 4), (2, 2), (3, 1), (3, 3), (4, 3)]).unwrap();
        assert_eq!(s.hull().parts(), &[4, 3, 3, 3]);
    }

    #[test]
    fn border_strip_peeling_corners() {
        let s = Support::new([(1, 1), (1, 4), (2, 2), (3, 1), (3, 3), (4, 3)]).unwrap();
        let (strip, corner) = s.border_strip().unwrap();
        assert_eq!(corner, (4, 4));
        assert_eq!(strip.outer().parts(), &[4, 3, 3, 3]);
        assert_eq!(strip.inner().parts(), &[2, 2, 2]);

        let s2 = Support::new([(1, 1), (2, 2), (3, 1)]).unwrap();
        let (strip2, corner2) = s2.border_strip().unwrap();
        assert_eq!(corner2, (3, 2));
        assert_eq!(strip2.outer().parts(), &[2, 2, 1]);
        assert_eq!(strip2.inner().parts(), &[1]);

        let s3 = Support::new([(1, 1)]).unwrap();
        let (strip3, corner3) = s3.border_strip().unwrap();
        assert_eq!(corner3, (1, 1));
        assert_eq!(strip3.outer().parts(), &[1]);
        assert!(strip3.inner().is_empty());
    }

    #[test]
    fn profile_of_peeled_support() {
        let s = Support::new([(1, 1), (1, 4), (2, 2), (3, 1), (3, 3), (4, 3)]).unwrap();
        assert_eq!(s.profile().parts(), &[4, 3, 3, 2]);
        assert!(Support::default().profile().is_empty());
        // A single diagonal chain peels one cell at a time.
        let s = Support::new([(1, 1), (2, 2)]).unwrap();
        assert_eq!(s.profile().parts(), &[2, 2]);
    }

    #[test]
    fn empty_support_has_no_strip() {
        assert_eq!(Support::default().border_strip(), Err(Error::EmptySupport));
    }

    #[test]
    fn box_and_bounded_enumerations() {
        assert_eq!(partitions_in_box(2, 2).len(), 6);
        assert_eq!(partitions_in_box(3, 3).len(), 20);
        let under = bounded_subpartitions(&Partition::new(vec![3, 3]).unwrap(), 4, 2);
        assert!(under.iter().all(|p| p.size() <= 4 && p.len() <= 2));
        assert!(under.contains(&Partition::new(vec![3, 1]).unwrap()));
        assert!(!under.contains(&Partition::new(vec![3, 2]).unwrap()));
    }

    #[test]
    fn serde_partition_is_bare_array() {
        let p = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), "[3,1]");
        let q: Partition = serde_json::from_str("[3,1]").unwrap();
        assert_eq!(p, q);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
