//! Plane partitions: stacks of unit cubes over a Young diagram, their
//! layer-by-layer correspondence with integer matrices, bounded and
//! symmetric families, and norm/trace generating series.
//!
//! A matrix maps to a plane partition by reading the paired tableaux
//! column by column: the `k`th columns from the right, read bottom to
//! top, are the diagonal coordinates of the `k`th layer.  Layers nest,
//! and stacking them recovers the entries.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::characters::WeightPolynomial;
use crate::crystal::{Alphabet, Weight};
use crate::matrix::SparseMatrix;
use crate::shapes::{FrobeniusForm, Partition};
use crate::tableau::{Orientation, Tableau};
use crate::verma::BiTableau;
use crate::{Error, Result};

/// Finitely many positive entries, weakly decreasing along every row and
/// column; the support is a Young diagram.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct PlanePartition {
    rows: Vec<Vec<u32>>,
}

impl TryFrom<Vec<Vec<u32>>> for PlanePartition {
    type Error = Error;
    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        PlanePartition::new(rows)
    }
}

impl From<PlanePartition> for Vec<Vec<u32>> {
    fn from(p: PlanePartition) -> Vec<Vec<u32>> {
        p.rows
    }
}

impl PlanePartition {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        for (i, row) in rows.iter().enumerate() {
            if row.is_empty() || row.contains(&0) {
                return Err(Error::BadPlanePartition);
            }
            if row.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::BadPlanePartition);
            }
            if i > 0 {
                let prev = &rows[i - 1];
                if row.len() > prev.len() || row.iter().zip(prev).any(|(a, b)| a > b) {
                    return Err(Error::BadPlanePartition);
                }
            }
        }
        Ok(PlanePartition { rows })
    }

    pub fn empty() -> Self {
        PlanePartition::default()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry at 1-based position, zero outside the support.
    pub fn entry(&self, i: u32, j: u32) -> u32 {
        assert!(i >= 1 && j >= 1, "positions are 1-based");
        self.rows
            .get(i as usize - 1)
            .and_then(|row| row.get(j as usize - 1))
            .copied()
            .unwrap_or(0)
    }

    pub fn shape(&self) -> Partition {
        Partition::from_lengths(self.rows.iter().map(|r| r.len() as u32).collect())
            .expect("support rows weakly decrease")
    }

    /// Total number of cubes.
    pub fn norm(&self) -> u64 {
        self.rows.iter().flatten().map(|&v| v as u64).sum()
    }

    /// Largest entry; equals the number of layers.
    pub fn max_entry(&self) -> u32 {
        self.entry(1, 1)
    }

    /// Sum of the entries along the `r`th diagonal.
    pub fn trace(&self, r: i64) -> u64 {
        let mut total = 0;
        for i in 1..=self.rows.len() as i64 {
            let j = i + r;
            if j >= 1 {
                total += self.entry(i as u32, j as u32) as u64;
            }
        }
        total
    }

    /// The nonzero diagonal sums.
    pub fn traces(&self) -> BTreeMap<i64, u64> {
        let depth = self.rows.len() as i64;
        let width = self.rows.first().map_or(0, |r| r.len()) as i64;
        (1 - depth..width)
            .filter_map(|r| {
                let t = self.trace(r);
                (t > 0).then_some((r, t))
            })
            .collect()
    }

    /// Minus the trace-weighted sum of simple roots.
    pub fn weight(&self) -> Weight {
        self.traces()
            .into_iter()
            .fold(Weight::zero(), |acc, (r, t)| acc + Weight::simple_root(r) * -(t as i64))
    }

    pub fn transposed(&self) -> Self {
        let width = self.rows.first().map_or(0, |r| r.len());
        let rows = (0..width)
            .map(|j| self.rows.iter().map_while(|row| row.get(j).copied()).collect())
            .collect();
        PlanePartition { rows }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transposed()
    }

    /// Horizontal slices at heights `1..=max`, largest first.
    pub fn layers(&self) -> Vec<Partition> {
        (1..=self.max_entry())
            .map(|k| {
                let lengths = self
                    .rows
                    .iter()
                    .map(|row| row.iter().take_while(|&&v| v >= k).count() as u32)
                    .collect();
                Partition::from_lengths(lengths).expect("level sets shrink")
            })
            .collect()
    }

    /// Stacks nested shapes back into entries.
    pub fn from_layers(layers: &[Partition]) -> Result<Self> {
        if layers.windows(2).any(|w| !w[0].contains(&w[1])) {
            return Err(Error::BadPlanePartition);
        }
        let Some(first) = layers.first() else {
            return Ok(PlanePartition::empty());
        };
        let rows = (1..=first.len())
            .map(|i| {
                (1..=first.part(i))
                    .map_while(|j| {
                        let v = layers.iter().filter(|l| l.has_cell(i as u32, j)).count() as u32;
                        (v > 0).then_some(v)
                    })
                    .collect()
            })
            .collect();
        PlanePartition::new(rows)
    }
}

/// Layers of the image: the `k`th columns from the right of both
/// tableaux, read bottom to top, are the column and row diagonal
/// coordinates of layer `k`.
pub fn from_matrix(a: &SparseMatrix) -> PlanePartition {
    let pair = BiTableau::from_matrix(a);
    let layers: Vec<Partition> = (1..=pair.shape().first())
        .map(|k| {
            let alpha: Vec<u32> =
                pair.s().column_from_right(k).iter().rev().map(|l| l.rank() as u32).collect();
            let beta: Vec<u32> =
                pair.t().column_from_right(k).iter().rev().map(|l| l.rank() as u32).collect();
            FrobeniusForm::new(alpha, beta)
                .expect("paired columns carry strict diagonal data")
                .decode()
        })
        .collect();
    PlanePartition::from_layers(&layers).expect("matrix layers nest")
}

/// Rebuilds the paired tableaux column by column from the layers and
/// runs the insertion inverse.
pub fn to_matrix(p: &PlanePartition) -> SparseMatrix {
    let forms: Vec<FrobeniusForm> = p.layers().iter().map(|l| l.frobenius()).collect();
    let depth = forms.first().map_or(0, |f| f.diagonal_length());
    let mut s_rows = Vec::new();
    let mut t_rows = Vec::new();
    for r in 0..depth {
        let width = forms.iter().filter(|f| f.diagonal_length() > r).count() as u32;
        // Column k from the right holds layer k; row r lists k = width..1.
        let s_row = (1..=width).rev().map(|k| -(forms[k as usize - 1].alpha()[r] as i64)).collect();
        let t_row = (1..=width).rev().map(|k| forms[k as usize - 1].beta()[r] as i64).collect();
        s_rows.push(s_row);
        t_rows.push(t_row);
    }
    let s = Tableau::from_rows(Orientation::AntiNormal, Alphabet::NegativeDual, Partition::empty(), s_rows)
        .expect("nested layers fill a dual tableau");
    let t = Tableau::from_rows(Orientation::AntiNormal, Alphabet::Positive, Partition::empty(), t_rows)
        .expect("nested layers fill a recording tableau");
    BiTableau::new(s, t).expect("layer tableaux share a shape").matrix()
}

/// A family of plane partitions cut out by optional constraints: a shape
/// containing the support, a ceiling on the largest entry, and symmetry
/// with diagonal entries divisible by the fold parameter.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FamilyRaw", into = "FamilyRaw")]
pub struct Family {
    shape: Option<Partition>,
    top: Option<u32>,
    fold: Option<u32>,
}

#[derive(Serialize, Deserialize)]
struct FamilyRaw {
    shape: Option<Partition>,
    top: Option<u32>,
    fold: Option<u32>,
}

impl TryFrom<FamilyRaw> for Family {
    type Error = Error;
    fn try_from(raw: FamilyRaw) -> Result<Self> {
        let mut f = Family::all();
        if let Some(shape) = raw.shape {
            f = f.under(shape);
        }
        if let Some(n) = raw.top {
            f = f.capped(n);
        }
        if let Some(epsilon) = raw.fold {
            f = f.folded(epsilon)?;
        }
        Ok(f)
    }
}

impl From<Family> for FamilyRaw {
    fn from(f: Family) -> FamilyRaw {
        FamilyRaw { shape: f.shape, top: f.top, fold: f.fold }
    }
}

impl Family {
    pub fn all() -> Self {
        Family::default()
    }

    /// Restrict the support to a shape.
    pub fn under(mut self, shape: Partition) -> Self {
        self.shape = Some(shape);
        self
    }

    /// Bound the largest entry.
    pub fn capped(mut self, n: u32) -> Self {
        self.top = Some(n);
        self
    }

    /// Symmetric members whose diagonal entries `epsilon` divides.
    pub fn folded(mut self, epsilon: u32) -> Result<Self> {
        if !(1..=2).contains(&epsilon) {
            return Err(Error::BadFoldParameter);
        }
        self.fold = Some(epsilon);
        Ok(self)
    }

    pub fn shape(&self) -> Option<&Partition> {
        self.shape.as_ref()
    }

    pub fn top(&self) -> Option<u32> {
        self.top
    }

    pub fn fold(&self) -> Option<u32> {
        self.fold
    }

    pub fn contains(&self, p: &PlanePartition) -> bool {
        if let Some(shape) = &self.shape {
            if !shape.contains(&p.shape()) {
                return false;
            }
        }
        if let Some(n) = self.top {
            if p.max_entry() > n {
                return false;
            }
        }
        if let Some(epsilon) = self.fold {
            if !p.is_symmetric() {
                return false;
            }
            let diag = p.rows.len() as u32;
            if (1..=diag).any(|i| p.entry(i, i) % epsilon != 0) {
                return false;
            }
        }
        true
    }
}

/// Every member of the family with at most `max_norm` cubes, sorted.
pub fn enumerate(family: &Family, max_norm: u32) -> Vec<PlanePartition> {
    fn rows_below(caps: &[u32], budget: u32) -> Vec<Vec<u32>> {
        fn rec(caps: &[u32], pos: usize, prev: u32, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if pos >= caps.len() {
                return;
            }
            for v in 1..=caps[pos].min(prev).min(left) {
                cur.push(v);
                out.push(cur.clone());
                rec(caps, pos + 1, v, left - v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(caps, 0, u32::MAX, budget, &mut Vec::new(), &mut out);
        out
    }

    fn rec(family: &Family, rows: &mut Vec<Vec<u32>>, left: u32, out: &mut Vec<PlanePartition>) {
        let here = PlanePartition { rows: rows.clone() };
        if family.contains(&here) {
            out.push(here);
        }
        if left == 0 {
            return;
        }
        let r = rows.len() + 1;
        let width = match &family.shape {
            Some(shape) => shape.part(r).min(left),
            None => {
                if r == 1 {
                    left
                } else {
                    left.min(rows[r - 2].len() as u32)
                }
            }
        };
        let caps: Vec<u32> = (0..width as usize)
            .map(|j| {
                if r == 1 {
                    family.top.unwrap_or(left)
                } else {
                    rows[r - 2].get(j).copied().unwrap_or(0)
                }
            })
            .collect();
        for row in rows_below(&caps, left) {
            let used: u32 = row.iter().sum();
            rows.push(row);
            rec(family, rows, left - used, out);
            rows.pop();
        }
    }

    let mut out = Vec::new();
    rec(family, &mut Vec::new(), max_norm, &mut out);
    out.sort();
    out
}

/// Coefficients of the family's norm series up to `q^max_norm`.
pub fn norm_series(family: &Family, max_norm: u32) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::zero(); max_norm as usize + 1];
    for p in enumerate(family, max_norm) {
        coeffs[p.norm() as usize] += 1;
    }
    coeffs
}

/// Sum of the exponentials of the members' weights; reading
/// `e^{-simple_root(r)}` as the diagonal variable of index `r` makes this
/// the trace series.
pub fn trace_character(family: &Family, max_norm: u32) -> WeightPolynomial {
    WeightPolynomial::character(enumerate(family, max_norm).iter().map(|p| p.weight()))
}

/// Coefficients of `prod_{i>=1} (1 - q^i)^{-i}` up to `q^max`.
pub fn macmahon_series(max: u32) -> Vec<BigInt> {
    product_series(max, |i| i)
}

/// Coefficients of `prod_{i>=1} (1 - q^i)^{-min(i,n)}` up to `q^max`.
pub fn macmahon_bounded_series(n: u32, max: u32) -> Vec<BigInt> {
    product_series(max, |i| i.min(n))
}

fn product_series(max: u32, exponent: impl Fn(u32) -> u32) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::zero(); max as usize + 1];
    coeffs[0] = BigInt::one();
    for i in 1..=max as usize {
        // Each pass multiplies by one geometric factor 1/(1 - q^i).
        for _ in 0..exponent(i as u32) {
            for j in i..coeffs.len() {
                let lower = coeffs[j - i].clone();
                coeffs[j] += lower;
            }
        }
    }
    coeffs
}

/// Writes a weight as minus a finite nonnegative combination of simple
/// roots; the multiplicities are the diagonal sums of any plane partition
/// with that weight.
pub fn trace_vector(weight: &Weight) -> Result<BTreeMap<i64, i64>> {
    if weight.level_coeff() != 0 {
        return Err(Error::OutsideImage("level coordinate must vanish"));
    }
    let mut ks = BTreeMap::new();
    let top = weight.eps_support().filter(|&(i, _)| i > 0).map(|(i, _)| i).max().unwrap_or(0);
    let mut k = 0;
    for m in (1..=top).rev() {
        k += weight.eps_coeff(m);
        if m >= 2 && k != 0 {
            ks.insert(m - 1, k);
        }
    }
    let from_positive = k;
    let bot = weight.eps_support().filter(|&(i, _)| i < 0).map(|(i, _)| -i).max().unwrap_or(0);
    let mut k = 0;
    for m in (1..=bot).rev() {
        k -= weight.eps_coeff(-m);
        if m >= 2 && k != 0 {
            ks.insert(-(m - 1), k);
        }
    }
    if from_positive != k {
        return Err(Error::OutsideImage("coordinates do not telescope"));
    }
    if k != 0 {
        ks.insert(0, k);
    }
    if ks.values().any(|&v| v < 0) {
        return Err(Error::OutsideImage("negative root multiplicity"));
    }
    Ok(ks)
}

/// Folded variant: multiplicities of the merged roots, indexed by `r >= 0`,
/// with the diagonal multiplicity divided by `epsilon`.
pub fn folded_trace_vector(weight: &Weight, epsilon: u32) -> Result<BTreeMap<i64, i64>> {
    if !(1..=2).contains(&epsilon) {
        return Err(Error::BadFoldParameter);
    }
    let ks = trace_vector(weight)?;
    let mut out = BTreeMap::new();
    for (&r, &k) in &ks {
        if r < 0 {
            continue;
        }
        if r == 0 {
            if k % epsilon as i64 != 0 {
                return Err(Error::OffFoldedLattice);
            }
            out.insert(0, k / epsilon as i64);
        } else {
            if ks.get(&-r) != Some(&k) {
                return Err(Error::OffFoldedLattice);
            }
            out.insert(r, k);
        }
    }
    if ks.keys().any(|&r| r < 0 && !ks.contains_key(&-r)) {
        return Err(Error::OffFoldedLattice);
    }
    Ok(out)
}

/// Norm coefficients of a character: every exponential contributes
/// `q^{sum of its root multiplicities}`; terms beyond `max` are dropped.
pub fn norm_specialization(p: &WeightPolynomial, max: u32) -> Result<Vec<BigInt>> {
    let mut coeffs = vec![BigInt::zero(); max as usize + 1];
    for (w, c) in p.terms() {
        let exponent: i64 = trace_vector(w)?.values().sum();
        if exponent <= max as i64 {
            coeffs[exponent as usize] += c;
        }
    }
    Ok(coeffs)
}

/// Folded norm coefficients: the diagonal root counts `epsilon` cubes and
/// every merged root counts two.
pub fn folded_norm_specialization(
    p: &WeightPolynomial,
    epsilon: u32,
    max: u32,
) -> Result<Vec<BigInt>> {
    let mut coeffs = vec![BigInt::zero(); max as usize + 1];
    for (w, c) in p.terms() {
        let ks = folded_trace_vector(w, epsilon)?;
        let exponent: i64 =
            ks.iter().map(|(&r, &k)| if r == 0 { epsilon as i64 * k } else { 2 * k }).sum();
        if exponent <= max as i64 {
            coeffs[exponent as usize] += c;
        }
    }
    Ok(coeffs)
}
