//! Partial closures of the matrix crystal under the lowering operators.
//!
//! The pieces are indexed by partitions through the Grassmannian quotient
//! of the Weyl group: an element `w` is recorded by its shape, a reduced
//! word for it is read off any standard filling of that shape, and the
//! piece itself can be produced two ways — by closing the zero matrix
//! under lowering monomials along the word, or directly as the set of
//! matrices whose support profile fits inside the shape.  The image under
//! the tableau correspondence is cut out by row flags coming from the
//! diagonal coordinates of the shape.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::crystal::{Alphabet, Dir};
use crate::matrix::{FoldedMatrix, SparseMatrix};
use crate::shapes::{bounded_partitions, Partition, SkewShape};
use crate::tableau::{self, Orientation, Tableau};
use crate::verma::{BiTableau, VermaTriple};
use crate::{Error, Result};

/// Which family of operators the element indexes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Group {
    /// Every integer index acts on its own.
    Unfolded,
    /// Indices `i` and `-i` act together and the corner operator is
    /// applied `ε` times at once.
    Folded(u32),
}

/// A minimal-length coset representative, recorded by its shape.
///
/// Containment of shapes is the Bruhat order on these representatives, so
/// the shape determines the element completely.  Folded elements must have
/// a self-conjugate shape.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ElementRaw", into = "ElementRaw")]
pub struct GrassmannianElement {
    shape: Partition,
    group: Group,
}

#[derive(Serialize, Deserialize)]
struct ElementRaw {
    shape: Partition,
    group: Group,
}

impl TryFrom<ElementRaw> for GrassmannianElement {
    type Error = Error;
    fn try_from(raw: ElementRaw) -> Result<Self> {
        GrassmannianElement::new(raw.shape, raw.group)
    }
}

impl From<GrassmannianElement> for ElementRaw {
    fn from(w: GrassmannianElement) -> ElementRaw {
        ElementRaw { shape: w.shape, group: w.group }
    }
}

/// Diagonal coordinates of a shape together with their reversals, which
/// bound tableau rows counted from the bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagData {
    /// Column coordinates, strictly decreasing.
    pub alpha: Vec<u32>,
    /// Row coordinates, strictly decreasing.
    pub beta: Vec<u32>,
    /// `alpha` reversed, weakly increasing bottom-row-first.
    pub phi: Vec<u32>,
    /// `beta` reversed.
    pub psi: Vec<u32>,
    /// Diagonal length of the shape.
    pub d: usize,
}

impl GrassmannianElement {
    pub fn new(shape: Partition, group: Group) -> Result<Self> {
        if let Group::Folded(epsilon) = group {
            if !(1..=2).contains(&epsilon) {
                return Err(Error::BadFoldParameter);
            }
            if !shape.is_self_conjugate() {
                return Err(Error::NotSelfConjugate);
            }
        }
        Ok(GrassmannianElement { shape, group })
    }

    pub fn identity(group: Group) -> Self {
        GrassmannianElement::new(Partition::empty(), group).expect("the empty shape folds")
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn group(&self) -> Group {
        self.group
    }

    /// Number of boxes, which is the length of the unfolded element.
    pub fn length(&self) -> u64 {
        self.shape.parts().iter().map(|&p| p as u64).sum()
    }

    pub fn flags(&self) -> FlagData {
        let f = self.shape.frobenius();
        let alpha = f.alpha().to_vec();
        let beta = f.beta().to_vec();
        let phi = alpha.iter().rev().copied().collect();
        let psi = beta.iter().rev().copied().collect();
        FlagData { d: alpha.len(), alpha, beta, phi, psi }
    }

    /// Bruhat order: containment of shapes within one group.
    pub fn bruhat_leq(&self, other: &GrassmannianElement) -> Result<bool> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        Ok(other.shape.contains(&self.shape))
    }

    /// Reads a reduced word off a standard filling of the shape: the
    /// residues of the boxes labelled `n, n-1, …, 1`.  Words act right to
    /// left, so the box labelled 1 is applied first.
    pub fn standard_word(&self, filling: &Tableau) -> Result<Vec<i64>> {
        let labels = standard_labels(filling)?;
        if filling.outer() != &self.shape {
            return Err(Error::ShapeMismatch);
        }
        Ok(labels.iter().rev().map(|&(r, c)| residue(r, c)).collect())
    }

    /// A fixed reduced word: column-first residues for the unfolded group,
    /// corner peeling for the folded one.
    pub fn canonical_word(&self) -> Vec<i64> {
        match self.group {
            Group::Unfolded => self
                .standard_word(&column_filling(&self.shape))
                .expect("the column-first filling is standard"),
            Group::Folded(_) => folded_word(&self.shape),
        }
    }

    /// Whether the matrix belongs to the piece indexed by `self`: the
    /// profile of its support must fit inside the shape.
    pub fn contains_matrix(&self, a: &SparseMatrix) -> bool {
        self.shape.contains(&a.support().profile())
    }

    /// Folded membership; the symmetry constraint is carried by the type,
    /// so only the support profile is left to check.
    pub fn contains_folded(&self, m: &FoldedMatrix) -> Result<bool> {
        match self.group {
            Group::Folded(epsilon) if epsilon == m.epsilon() => {
                Ok(self.contains_matrix(m.base()))
            }
            _ => Err(Error::GroupMismatch),
        }
    }
}

/// Residue of the box in the given row and column, both 1-based: constant
/// along diagonals, zero on the main one, positive above it.
pub fn residue(row: u32, col: u32) -> i64 {
    col as i64 - row as i64
}

/// The standard filling that numbers columns left to right, each top to
/// bottom.
pub fn column_filling(shape: &Partition) -> Tableau {
    let heights = shape.conjugate();
    let mut rows: Vec<Vec<i64>> = (1..=shape.len()).map(|r| vec![0; shape.part(r) as usize]).collect();
    let mut next = 1i64;
    for c in 1..=shape.first() {
        for r in 1..=heights.part(c as usize) {
            rows[r as usize - 1][c as usize - 1] = next;
            next += 1;
        }
    }
    Tableau::from_rows(Orientation::Normal, Alphabet::Positive, Partition::empty(), rows)
        .expect("column numbering is standard")
}

/// The standard filling that numbers rows top to bottom, each left to
/// right.
pub fn row_filling(shape: &Partition) -> Tableau {
    let mut rows = Vec::new();
    let mut next = 1i64;
    for r in 1..=shape.len() {
        rows.push((0..shape.part(r)).map(|k| next + k as i64).collect::<Vec<_>>());
        next += shape.part(r) as i64;
    }
    Tableau::from_rows(Orientation::Normal, Alphabet::Positive, Partition::empty(), rows)
        .expect("row numbering is standard")
}

/// All standard fillings of the shape, built by choosing which corner
/// carries the largest label.
pub fn standard_fillings(shape: &Partition) -> Vec<Tableau> {
    fn rec(parts: &mut Vec<u32>, label: i64, grid: &mut Vec<Vec<i64>>, out: &mut Vec<Vec<Vec<i64>>>) {
        if label == 0 {
            out.push(grid.clone());
            return;
        }
        for r in 0..parts.len() {
            let width = parts[r];
            if width == 0 || (r + 1 < parts.len() && parts[r + 1] == width) {
                continue;
            }
            // (r+1, width) is a removable corner.
            parts[r] -= 1;
            grid[r][width as usize - 1] = label;
            rec(parts, label - 1, grid, out);
            parts[r] += 1;
        }
    }
    let mut parts = shape.parts().to_vec();
    let mut grid: Vec<Vec<i64>> = parts.iter().map(|&p| vec![0; p as usize]).collect();
    let mut grids = Vec::new();
    rec(&mut parts, shape.cells().count() as i64, &mut grid, &mut grids);
    grids
        .into_iter()
        .map(|rows| {
            Tableau::from_rows(Orientation::Normal, Alphabet::Positive, Partition::empty(), rows)
                .expect("corner-by-corner numbering is standard")
        })
        .collect()
}

/// Positions of the labels `1..=n`, or an error if the filling is not a
/// standard one.  Returned 1-based, indexed by label.
fn standard_labels(filling: &Tableau) -> Result<Vec<(u32, u32)>> {
    if filling.orientation() != Orientation::Normal
        || filling.alphabet() != Alphabet::Positive
        || !filling.is_straight()
    {
        return Err(Error::NotStandard);
    }
    let n = filling.rows().iter().map(Vec::len).sum::<usize>();
    let mut spots = vec![None; n];
    for (r, row) in filling.rows().iter().enumerate() {
        for (k, &v) in row.iter().enumerate() {
            let label = v as usize;
            if label == 0 || label > n || spots[label - 1].is_some() {
                return Err(Error::NotStandard);
            }
            spots[label - 1] = Some((r as u32 + 1, k as u32 + 1));
        }
    }
    Ok(spots.into_iter().map(|s| s.expect("n distinct labels in 1..=n fill every slot")).collect())
}

/// Reduced word for a folded element: peel the self-conjugate shape one
/// corner orbit at a time, a mirrored pair of corners giving its positive
/// residue and a diagonal corner giving 0.  The first orbit peeled is the
/// first index of the word, hence the last one applied.
fn folded_word(shape: &Partition) -> Vec<i64> {
    let mut parts = shape.parts().to_vec();
    let mut word = Vec::new();
    while let Some(rows) = parts.iter().rposition(|&p| p > 0).map(|r| r + 1) {
        let corner = (1..=rows)
            .filter(|&r| parts[r - 1] > if r < rows { parts[r] } else { 0 })
            .map(|r| (r as u32, parts[r - 1]))
            .max_by_key(|&(r, c)| residue(r, c))
            .expect("a nonempty shape has a corner");
        let (r, c) = corner;
        // A corner below the diagonal always has a mirror image above it,
        // so the winner never sits below.
        debug_assert!(c >= r);
        parts[r as usize - 1] -= 1;
        if r != c {
            // The mirrored corner sits at (c, r) by self-conjugacy.
            parts[c as usize - 1] -= 1;
        }
        word.push(residue(r, c));
        while parts.last() == Some(&0) {
            parts.pop();
        }
    }
    word
}

/// Closes a seed under strings of one lowering operator at a time, walking
/// the word right to left and keeping elements within the size bound.
fn monomial_closure<T, S, M>(seed: T, word: &[i64], bound: u64, step: S, size: M) -> BTreeSet<T>
where
    T: Ord + Clone + Send + Sync,
    S: Fn(&T, i64) -> Option<T> + Sync,
    M: Fn(&T) -> u64 + Sync,
{
    let mut set = BTreeSet::from([seed]);
    for &i in word.iter().rev() {
        let grown: Vec<T> = set
            .par_iter()
            .flat_map_iter(|x| {
                // Lowering never merges strings, so each walk is disjoint
                // from the others except for shared tails.
                let mut string = Vec::new();
                let mut cur = x.clone();
                while let Some(next) = step(&cur, i) {
                    if size(&next) > bound {
                        break;
                    }
                    string.push(next.clone());
                    cur = next;
                }
                string
            })
            .collect();
        set.extend(grown);
    }
    set
}

/// Every matrix of the form `f_{i_1}^{m_1} ⋯ f_{i_r}^{m_r} 0` along the
/// word, with entry sum at most `bound`.
pub fn matrix_closure(word: &[i64], bound: u64) -> BTreeSet<SparseMatrix> {
    monomial_closure(
        SparseMatrix::zero(),
        word,
        bound,
        |a, i| a.apply(i, Dir::Lower),
        SparseMatrix::sum,
    )
}

/// Folded counterpart over the composite operators.  Word indices must be
/// nonnegative.
pub fn folded_closure(word: &[i64], epsilon: u32, bound: u64) -> Result<BTreeSet<FoldedMatrix>> {
    let seed = FoldedMatrix::zero(epsilon)?;
    Ok(monomial_closure(seed, word, bound, |m, i| m.apply(i, Dir::Lower), |m| m.base().sum()))
}

/// The same closure engine run over triples seeded with a pair of highest
/// tableaux, bounded by the entry sum of the matrix slot.
pub fn triple_closure(
    mu: &Partition,
    nu: &Partition,
    word: &[i64],
    bound: u64,
) -> BTreeSet<VermaTriple> {
    monomial_closure(
        VermaTriple::highest(mu, nu),
        word,
        bound,
        |t, i| t.apply(i, Dir::Lower),
        |t| t.matrix().sum(),
    )
}

/// All pairs of anti tableaux on one shape obeying the row flags of `w`,
/// with at most `bound` cells: the i-th row from the bottom is capped by
/// the i-th diagonal coordinate on each side.
pub fn flagged_pairs(w: &GrassmannianElement, bound: u64) -> Result<BTreeSet<BiTableau>> {
    let flags = w.flags();
    let mut out = BTreeSet::new();
    for nu in bounded_partitions(bound.min(u32::MAX as u64) as u32, flags.d) {
        let s_bounds = &flags.alpha[..nu.len()];
        let t_bounds = &flags.beta[..nu.len()];
        let shape = SkewShape::straight(nu);
        let left =
            tableau::flagged(Orientation::AntiNormal, Alphabet::NegativeDual, &shape, s_bounds)?;
        let right = tableau::flagged(Orientation::AntiNormal, Alphabet::Positive, &shape, t_bounds)?;
        for s in &left {
            for t in &right {
                out.insert(BiTableau::new(s.clone(), t.clone())?);
            }
        }
    }
    Ok(out)
}

/// Flagged single tableaux matching the folded closure through the
/// symmetric correspondence: shapes whose parts are all divisible by the
/// fold parameter, rows flagged from the bottom by the diagonal column
/// coordinates.
pub fn flagged_folded(w: &GrassmannianElement, bound: u64) -> Result<BTreeSet<Tableau>> {
    let Group::Folded(epsilon) = w.group else {
        return Err(Error::GroupMismatch);
    };
    let flags = w.flags();
    let mut out = BTreeSet::new();
    for nu in bounded_partitions(bound.min(u32::MAX as u64) as u32, flags.d) {
        if nu.parts().iter().any(|&p| p % epsilon != 0) {
            continue;
        }
        let bounds = &flags.alpha[..nu.len()];
        let shape = SkewShape::straight(nu);
        out.extend(tableau::flagged(Orientation::AntiNormal, Alphabet::Positive, &shape, bounds)?);
    }
    Ok(out)
}
