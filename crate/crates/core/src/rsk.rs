//! RSK correspondence between integer matrices and pairs of anti-normal
//! tableaux of the same shape.
//!
//! The insertion tableau is built over the dual alphabet by column-inserting
//! the dual word of the column-major biword from right to left; the
//! recording tableau notes the column letter of each biletter at the cell
//! its insertion creates. Starting from a nonempty tableau instead of the
//! empty one gives the skew variant, where the recording tableau has the
//! seed's shape as its inner boundary.

use crate::crystal::{Alphabet, Letter};
use crate::matrix::{Biword, BiwordKind, FoldedMatrix, SparseMatrix};
use crate::shapes::Partition;
use crate::tableau::{Orientation, Tableau};
use crate::{Error, Result};

/// Sends a matrix to its insertion/recording pair.
pub fn rsk(a: &SparseMatrix) -> (Tableau, Tableau) {
    let empty = Tableau::empty(Orientation::AntiNormal, Alphabet::NegativeDual);
    skew_rsk(&empty, a).expect("insertion from the empty tableau cannot fail")
}

/// Recovers the matrix from an insertion/recording pair.
pub fn rsk_inverse(p: &Tableau, q: &Tableau) -> Result<SparseMatrix> {
    if !q.is_straight() {
        return Err(Error::ShapeMismatch);
    }
    let (seed, a) = skew_rsk_inverse(p, q)?;
    debug_assert!(seed.is_empty(), "a straight recording tableau exhausts the insertion one");
    Ok(a)
}

/// Inserts the biletters of `a` into the straight tableau `seed`. The
/// recording tableau is skew with the seed's shape inside.
pub fn skew_rsk(seed: &Tableau, a: &SparseMatrix) -> Result<(Tableau, Tableau)> {
    if seed.orientation() != Orientation::AntiNormal || !seed.is_straight() {
        return Err(Error::ShapeMismatch);
    }
    if seed.alphabet() != Alphabet::NegativeDual {
        return Err(Error::AlphabetMismatch);
    }
    let mut p = seed.clone();
    let mut cells = Vec::new();
    for &(i, j) in a.to_biword(BiwordKind::ColumnMajor).pairs().iter().rev() {
        let (next, (r, c)) = p.insert(Letter::dual(i))?;
        p = next;
        cells.push((r, c, j as i64));
    }
    let q = Tableau::from_cells(Alphabet::Positive, seed.outer().clone(), &cells)?;
    Ok((p, q))
}

/// Peels the insertions recorded by `q` off `p`, returning the seed tableau
/// and the matrix. Cells are undone by ascending recorded letter, leftmost
/// first among equals, which reverses the insertion order exactly.
pub fn skew_rsk_inverse(p: &Tableau, q: &Tableau) -> Result<(Tableau, SparseMatrix)> {
    if p.orientation() != Orientation::AntiNormal
        || q.orientation() != Orientation::AntiNormal
        || !p.is_straight()
    {
        return Err(Error::ShapeMismatch);
    }
    if p.alphabet() != Alphabet::NegativeDual || q.alphabet() != Alphabet::Positive {
        return Err(Error::AlphabetMismatch);
    }
    if p.outer() != q.outer() {
        return Err(Error::ShapeMismatch);
    }
    let mut cells: Vec<(i64, u32)> = Vec::new();
    for (r, row) in q.rows().iter().enumerate() {
        let len = q.outer().part(r + 1);
        for (k, &v) in row.iter().enumerate() {
            cells.push((v, len - k as u32));
        }
    }
    cells.sort_by_key(|&(v, c)| (v, std::cmp::Reverse(c)));
    let mut seed = p.clone();
    let mut pairs = Vec::with_capacity(cells.len());
    for (v, c) in cells {
        let (next, letter) = seed.remove_top(c)?;
        seed = next;
        pairs.push(((-letter.value()) as u32, v as u32));
    }
    if seed.outer() != q.inner() {
        return Err(Error::ShapeMismatch);
    }
    let a = Biword::new(BiwordKind::ColumnMajor, pairs)?.matrix();
    Ok((seed, a))
}

/// Number of columns of the insertion tableau of `a`.
pub fn column_count(a: &SparseMatrix) -> u32 {
    rsk(a).0.outer().first()
}

/// The positive half of the pair of a symmetric matrix; the dual half is its
/// entrywise mirror image, so nothing is lost. When the diagonal is divisible
/// by 2, every part of the shape is even.
pub fn symmetric_tableau(m: &FoldedMatrix) -> Tableau {
    let (p, q) = rsk(m.base());
    debug_assert_eq!(
        p,
        q.dual_mirror().expect("recording tableaux live in the positive alphabet"),
        "symmetric matrices insert into mirror pairs"
    );
    q
}

/// Shape of the pair of a symmetric matrix.
pub fn symmetric_shape(m: &FoldedMatrix) -> Partition {
    symmetric_tableau(m).outer().clone()
}
