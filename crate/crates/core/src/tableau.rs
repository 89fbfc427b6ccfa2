//! Semistandard tableaux of normal and anti-normal shape, with the column
//! insertion used by the matrix correspondence.
//!
//! Entries weakly increase along rows (left to right) and strictly increase
//! down columns. A normal tableau is stored by rows from the top; an
//! anti-normal one — the 180-degree rotation of a (skew) Young diagram, with
//! the longest row at the bottom and everything right-justified — by rows
//! from the bottom. In the anti-normal case the inner shape cuts cells out of
//! the bottom-right corner: row `i` from the bottom covers columns
//! `inner_i + 1 ..= outer_i` counted from the right.

use std::fmt;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::crystal::{Alphabet, Dir, Letter, Weight, Word};
use crate::shapes::{Partition, SkewShape};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    Normal,
    AntiNormal,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    orientation: Orientation,
    alphabet: Alphabet,
    outer: Partition,
    inner: Partition,
    /// Stored in visual left-to-right order within each structural row.
    rows: Vec<Vec<i64>>,
}

impl Tableau {
    /// Builds and validates a tableau. `rows` are indexed structurally: from
    /// the top for normal shapes, from the bottom for anti-normal ones.
    pub fn from_rows(
        orientation: Orientation,
        alphabet: Alphabet,
        inner: Partition,
        rows: Vec<Vec<i64>>,
    ) -> Result<Self> {
        let lengths: Vec<u32> = rows
            .iter()
            .enumerate()
            .map(|(r, row)| inner.part(r + 1) + row.len() as u32)
            .collect();
        let outer = Partition::from_lengths(lengths)?;
        if outer.len() < rows.len() && rows[outer.len()..].iter().any(|r| !r.is_empty()) {
            return Err(Error::BadSkewShape);
        }
        let mut rows = rows;
        rows.truncate(outer.len());
        let t = Tableau { orientation, alphabet, outer, inner, rows };
        t.validate()?;
        Ok(t)
    }

    pub fn empty(orientation: Orientation, alphabet: Alphabet) -> Self {
        Tableau {
            orientation,
            alphabet,
            outer: Partition::empty(),
            inner: Partition::empty(),
            rows: Vec::new(),
        }
    }

    /// The highest weight element of a straight shape: in every column the
    /// `l`th entry from the top is the `l`th smallest letter.
    pub fn highest(orientation: Orientation, alphabet: Alphabet, shape: &Partition) -> Self {
        let conj = shape.conjugate();
        let depth = |col: u32, from_bottom: u32| {
            // Entries count from the top of the column of height conj(col).
            conj.part(col as usize) - from_bottom + 1
        };
        let rows: Vec<Vec<i64>> = match orientation {
            Orientation::Normal => (1..=shape.len())
                .map(|r| vec![rank_to_value(alphabet, r as u32); shape.part(r) as usize])
                .collect(),
            Orientation::AntiNormal => (1..=shape.len())
                .map(|r| {
                    (1..=shape.part(r))
                        .rev()
                        .map(|c| rank_to_value(alphabet, depth(c, r as u32)))
                        .collect()
                })
                .collect(),
        };
        let t = Tableau {
            orientation,
            alphabet,
            outer: shape.clone(),
            inner: Partition::empty(),
            rows,
        };
        debug_assert!(t.validate().is_ok());
        t
    }

    fn validate(&self) -> Result<()> {
        SkewShape::new(self.outer.clone(), self.inner.clone())?;
        for (r, row) in self.rows.iter().enumerate() {
            let expect = self.outer.part(r + 1) - self.inner.part(r + 1);
            if row.len() as u32 != expect {
                return Err(Error::ShapeMismatch);
            }
            let mut prev: Option<i64> = None;
            for &v in row {
                let l = Letter::new(self.alphabet, v)?;
                if let Some(p) = prev {
                    if rank(self.alphabet, p) > l.rank() {
                        return Err(Error::NotSemistandard);
                    }
                }
                prev = Some(v);
            }
        }
        // Column strictness: compare each cell with the one visually above.
        for r in 0..self.rows.len() {
            for k in 0..self.rows[r].len() {
                let above =
                    above_value(self.orientation, &self.outer, &self.inner, &self.rows, r, k);
                if let Some(above) = above {
                    if rank(self.alphabet, above) >= rank(self.alphabet, self.rows[r][k]) {
                        return Err(Error::NotSemistandard);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape::new(self.outer.clone(), self.inner.clone())
            .expect("tableau shapes stay valid")
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Letter at structural row `r` (0-based), stored position `k`.
    pub fn value(&self, r: usize, k: usize) -> Letter {
        Letter::new(self.alphabet, self.rows[r][k]).expect("stored letters stay valid")
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Height of the `c`th column from the right of an anti-normal tableau,
    /// counting inner cells.
    pub fn column_height(&self, c: u32) -> u32 {
        debug_assert_eq!(self.orientation, Orientation::AntiNormal);
        self.outer.conjugate().part(c as usize)
    }

    /// Entries of the `c`th column from the right, top to bottom.
    pub fn column_from_right(&self, c: u32) -> Vec<Letter> {
        debug_assert_eq!(self.orientation, Orientation::AntiNormal);
        let top = self.column_height(c);
        let bottom = self.inner.conjugate().part(c as usize);
        (bottom..top)
            .rev()
            .map(|r| {
                let k = (self.outer.part(r as usize + 1) - c) as usize;
                self.value(r as usize, k)
            })
            .collect()
    }

    /// Smallest entry of the `c`th column from the right, if any.
    pub fn top_of_column(&self, c: u32) -> Option<Letter> {
        if self.orientation != Orientation::AntiNormal || c == 0 {
            return None;
        }
        let top = self.column_height(c);
        if top == self.inner.conjugate().part(c as usize) {
            return None;
        }
        let k = (self.outer.part(top as usize) - c) as usize;
        Some(self.value(top as usize - 1, k))
    }

    /// Adds `letter` on top of the `c`th column from the right.
    pub fn with_top_added(&self, c: u32, letter: Letter) -> Result<Tableau> {
        debug_assert_eq!(self.orientation, Orientation::AntiNormal);
        if letter.alphabet() != self.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let r = self.column_height(c) as usize;
        let mut rows = self.rows.clone();
        if r == rows.len() {
            rows.push(Vec::new());
        }
        if self.inner.part(r + 1) + rows[r].len() as u32 + 1 != c {
            return Err(Error::BadSkewShape);
        }
        rows[r].insert(0, letter.value());
        Tableau::from_rows(self.orientation, self.alphabet, self.inner.clone(), rows)
    }

    /// Removes the top cell of the `c`th column from the right.
    pub fn with_top_removed(&self, c: u32) -> Result<(Tableau, Letter)> {
        debug_assert_eq!(self.orientation, Orientation::AntiNormal);
        let letter = self.top_of_column(c).ok_or(Error::ShapeMismatch)?;
        let r = self.column_height(c) as usize - 1;
        if self.inner.part(r + 1) + (self.rows[r].len() as u32) != c {
            return Err(Error::ShapeMismatch);
        }
        let mut rows = self.rows.clone();
        rows[r].remove(0);
        let t = Tableau::from_rows(self.orientation, self.alphabet, self.inner.clone(), rows)?;
        Ok((t, letter))
    }

    /// Column-inserts a letter into a straight anti-normal tableau: in each
    /// column starting from the rightmost, the largest entry not exceeding
    /// the carry is bumped out to the next column on the left; if none
    /// exists, the carry lands on top of the column. Returns the new tableau
    /// and the created cell as (row from the bottom, column from the right).
    pub fn insert(&self, letter: Letter) -> Result<(Tableau, (u32, u32))> {
        if self.orientation != Orientation::AntiNormal || !self.is_straight() {
            return Err(Error::ShapeMismatch);
        }
        if letter.alphabet() != self.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let mut rows = self.rows.clone();
        let conj = self.outer.conjugate();
        let mut carry = letter.value();
        let mut c = 1u32;
        loop {
            let height = conj.part(c as usize);
            // Largest entry of column c not exceeding the carry: entries
            // shrink with the row index, so it is the first row from the
            // bottom whose entry fits.
            let hit = (0..height).find(|&r| {
                let k = (self.outer.part(r as usize + 1) - c) as usize;
                rank(self.alphabet, rows[r as usize][k]) <= rank(self.alphabet, carry)
            });
            match hit {
                Some(r) => {
                    let k = (self.outer.part(r as usize + 1) - c) as usize;
                    std::mem::swap(&mut rows[r as usize][k], &mut carry);
                    c += 1;
                }
                None => {
                    if height as usize == rows.len() {
                        rows.push(Vec::new());
                    }
                    debug_assert_eq!(rows[height as usize].len() as u32, c - 1);
                    rows[height as usize].insert(0, carry);
                    let t = Tableau {
                        orientation: self.orientation,
                        alphabet: self.alphabet,
                        outer: Partition::from_lengths(
                            rows.iter().map(|r| r.len() as u32).collect(),
                        )?,
                        inner: Partition::empty(),
                        rows,
                    };
                    debug_assert!(t.validate().is_ok());
                    return Ok((t, (height + 1, c)));
                }
            }
        }
    }

    /// Reverse of `insert`, starting from the top cell of column `c`: the
    /// extracted entry walks right, each column giving up its smallest entry
    /// not below the carry, and the final carry is returned.
    pub fn remove_top(&self, c: u32) -> Result<(Tableau, Letter)> {
        if self.orientation != Orientation::AntiNormal || !self.is_straight() {
            return Err(Error::ShapeMismatch);
        }
        let top = self.top_of_column(c).ok_or(Error::ShapeMismatch)?;
        let r = self.column_height(c) as usize - 1;
        if self.outer.part(r + 1) != c {
            return Err(Error::ShapeMismatch);
        }
        let mut rows = self.rows.clone();
        let mut carry = top.value();
        rows[r].remove(0);
        let outer = Partition::from_lengths(rows.iter().map(|r| r.len() as u32).collect())?;
        let conj = outer.conjugate();
        for cc in (1..c).rev() {
            let height = conj.part(cc as usize);
            // Smallest entry of column cc not below the carry: the last row
            // from the bottom whose entry qualifies.
            let hit = (0..height)
                .filter(|&rr| {
                    let k = (outer.part(rr as usize + 1) - cc) as usize;
                    rank(self.alphabet, rows[rr as usize][k]) >= rank(self.alphabet, carry)
                })
                .last()
                .ok_or(Error::NotSemistandard)?;
            let k = (outer.part(hit as usize + 1) - cc) as usize;
            std::mem::swap(&mut rows[hit as usize][k], &mut carry);
        }
        let t = Tableau::from_rows(self.orientation, self.alphabet, Partition::empty(), rows)?;
        Ok((t, Letter::new(self.alphabet, carry)?))
    }

    /// Builds an anti-normal tableau over `inner` from cells given as
    /// (row from the bottom, column from the right, value).
    pub fn from_cells(
        alphabet: Alphabet,
        inner: Partition,
        cells: &[(u32, u32, i64)],
    ) -> Result<Tableau> {
        let depth =
            (cells.iter().map(|&(r, _, _)| r).max().unwrap_or(0) as usize).max(inner.len());
        let mut by_row: Vec<Vec<(u32, i64)>> = vec![Vec::new(); depth];
        for &(r, c, v) in cells {
            if r == 0 || c == 0 {
                return Err(Error::BadSkewShape);
            }
            by_row[r as usize - 1].push((c, v));
        }
        let mut rows = Vec::with_capacity(depth);
        for (r, mut row) in by_row.into_iter().enumerate() {
            row.sort();
            let lo = inner.part(r + 1);
            if row.iter().enumerate().any(|(k, &(c, _))| c != lo + k as u32 + 1) {
                return Err(Error::BadSkewShape);
            }
            rows.push(row.into_iter().rev().map(|(_, v)| v).collect());
        }
        Tableau::from_rows(Orientation::AntiNormal, alphabet, inner, rows)
    }

    /// Cells in reading order: rows top to bottom, right to left within each.
    fn reading_cells(&self) -> Vec<(usize, usize)> {
        let structural: Vec<usize> = match self.orientation {
            Orientation::Normal => (0..self.rows.len()).collect(),
            Orientation::AntiNormal => (0..self.rows.len()).rev().collect(),
        };
        structural
            .into_iter()
            .flat_map(|r| (0..self.rows[r].len()).rev().map(move |k| (r, k)))
            .collect()
    }

    pub fn word(&self) -> Word {
        let values = self.reading_cells().iter().map(|&(r, k)| self.rows[r][k]).collect();
        Word::new(self.alphabet, values).expect("stored letters stay valid")
    }

    /// Negates every entry, exchanging the positive alphabet with the dual
    /// one while keeping the shape. Ranks are preserved, so the result is
    /// again semistandard.
    pub fn dual_mirror(&self) -> Result<Tableau> {
        let alphabet = match self.alphabet {
            Alphabet::Positive => Alphabet::NegativeDual,
            Alphabet::NegativeDual => Alphabet::Positive,
            _ => return Err(Error::AlphabetMismatch),
        };
        let rows = self.rows.iter().map(|row| row.iter().map(|v| -v).collect()).collect();
        Tableau::from_rows(self.orientation, alphabet, self.inner.clone(), rows)
    }

    pub fn weight(&self) -> Weight {
        self.word().weight()
    }

    pub fn eps(&self, i: i64) -> u32 {
        self.word().eps(i)
    }

    pub fn phi(&self, i: i64) -> u32 {
        self.word().phi(i)
    }

    pub fn apply(&self, i: i64, dir: Dir) -> Option<Tableau> {
        let (word, pos) = self.word().apply_at(i, dir)?;
        let (r, k) = self.reading_cells()[pos];
        let mut rows = self.rows.clone();
        rows[r][k] = word.values()[pos];
        let t = Tableau { rows, ..self.clone() };
        debug_assert!(t.validate().is_ok(), "operators preserve semistandardness");
        Some(t)
    }

    /// Lays the tableau out as in hand-drawn diagrams, with `.` for inner
    /// cells.
    pub fn pretty(&self) -> String {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|&v| {
                Letter::new(self.alphabet, v)
                    .expect("stored letters stay valid")
                    .to_string()
                    .len()
            })
            .max()
            .unwrap_or(1);
        let total = self.outer.first() as usize;
        let mut lines = Vec::new();
        let structural: Vec<usize> = match self.orientation {
            Orientation::Normal => (0..self.rows.len()).collect(),
            Orientation::AntiNormal => (0..self.rows.len()).rev().collect(),
        };
        for r in structural {
            let (lo, hi) = (self.inner.part(r + 1) as usize, self.outer.part(r + 1) as usize);
            let mut cells = vec![" ".repeat(width); total];
            for pos in 0..total {
                // Visual column -> 1-based column index in this row.
                let col = match self.orientation {
                    Orientation::Normal => pos + 1,
                    Orientation::AntiNormal => total - pos,
                };
                if col <= lo && (self.orientation == Orientation::Normal || col <= hi) {
                    cells[pos] = format!("{:>width$}", ".");
                } else if lo < col && col <= hi {
                    let k = match self.orientation {
                        Orientation::Normal => col - lo - 1,
                        Orientation::AntiNormal => hi - col,
                    };
                    let l = Letter::new(self.alphabet, self.rows[r][k])
                        .expect("stored letters stay valid");
                    cells[pos] = format!("{:>width$}", l.to_string());
                }
            }
            lines.push(cells.join(" ").trim_end().to_string());
        }
        lines.join("\n")
    }
}

fn rank(alphabet: Alphabet, v: i64) -> i64 {
    if alphabet == Alphabet::NegativeDual {
        -v
    } else {
        v
    }
}

/// Value of the cell drawn directly above structural cell `rows[r][k]`.
fn above_value(
    orientation: Orientation,
    outer: &Partition,
    inner: &Partition,
    rows: &[Vec<i64>],
    r: usize,
    k: usize,
) -> Option<i64> {
    match orientation {
        Orientation::Normal => {
            if r == 0 {
                return None;
            }
            let col = inner.part(r + 1) + k as u32 + 1;
            let (lo, hi) = (inner.part(r), outer.part(r));
            (lo < col && col <= hi).then(|| rows[r - 1][(col - lo - 1) as usize])
        }
        Orientation::AntiNormal => {
            if r + 1 >= rows.len() {
                return None;
            }
            let c = outer.part(r + 1) - k as u32;
            let (lo, hi) = (inner.part(r + 2), outer.part(r + 2));
            (lo < c && c <= hi).then(|| rows[r + 1][(hi - c) as usize])
        }
    }
}

fn rank_to_value(alphabet: Alphabet, rank: u32) -> i64 {
    match alphabet {
        Alphabet::NegativeDual => -(rank as i64),
        Alphabet::Positive => rank as i64,
        _ => unreachable!("highest-weight tableaux use the one-sided alphabets"),
    }
}

/// All semistandard fillings of the shape whose entries in structural row
/// `r` have rank at most `bounds[r]`, over the positive or dual alphabet.
pub fn flagged(
    orientation: Orientation,
    alphabet: Alphabet,
    shape: &SkewShape,
    bounds: &[u32],
) -> Result<Vec<Tableau>> {
    if !matches!(alphabet, Alphabet::Positive | Alphabet::NegativeDual) {
        return Err(Error::AlphabetMismatch);
    }
    if bounds.len() < shape.outer().len() {
        return Err(Error::ShapeMismatch);
    }
    let outer = shape.outer().clone();
    let inner = shape.inner().clone();
    let mut rows: Vec<Vec<i64>> = (1..=outer.len())
        .map(|r| vec![0; (outer.part(r) - inner.part(r)) as usize])
        .collect();
    // Fill in an order where the visual left and upper neighbors come first.
    let order: Vec<(usize, usize)> = match orientation {
        Orientation::Normal => {
            (0..rows.len()).flat_map(|r| (0..rows[r].len()).map(move |k| (r, k))).collect()
        }
        Orientation::AntiNormal => (0..rows.len())
            .rev()
            .flat_map(|r| (0..rows[r].len()).map(move |k| (r, k)))
            .collect(),
    };
    let mut out = Vec::new();
    fill(orientation, alphabet, &outer, &inner, bounds, &order, 0, &mut rows, &mut out);
    Ok(out)
}

/// Flagged enumeration with one uniform entry bound.
pub fn bounded(
    orientation: Orientation,
    alphabet: Alphabet,
    shape: &SkewShape,
    bound: u32,
) -> Result<Vec<Tableau>> {
    flagged(orientation, alphabet, shape, &vec![bound; shape.outer().len()])
}

#[allow(clippy::too_many_arguments)]
fn fill(
    orientation: Orientation,
    alphabet: Alphabet,
    outer: &Partition,
    inner: &Partition,
    bounds: &[u32],
    order: &[(usize, usize)],
    idx: usize,
    rows: &mut Vec<Vec<i64>>,
    out: &mut Vec<Tableau>,
) {
    let Some(&(r, k)) = order.get(idx) else {
        let t = Tableau {
            orientation,
            alphabet,
            outer: outer.clone(),
            inner: inner.clone(),
            rows: rows.clone(),
        };
        debug_assert!(t.validate().is_ok());
        out.push(t);
        return;
    };
    let mut lo = 1u32;
    if k > 0 {
        lo = lo.max(rank(alphabet, rows[r][k - 1]) as u32);
    }
    if let Some(v) = above_value(orientation, outer, inner, rows, r, k) {
        lo = lo.max(rank(alphabet, v) as u32 + 1);
    }
    for val in lo..=bounds[r] {
        rows[r][k] = rank_to_value(alphabet, val);
        fill(orientation, alphabet, outer, inner, bounds, order, idx + 1, rows, out);
    }
    rows[r][k] = 0;
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = ser.serialize_struct("Tableau", 4)?;
        s.serialize_field("orientation", &self.orientation)?;
        s.serialize_field("alphabet", &self.alphabet)?;
        s.serialize_field("inner", &self.inner)?;
        let rows: Vec<Vec<Letter>> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| Letter::new(self.alphabet, v).expect("stored letters stay valid"))
                    .collect()
            })
            .collect();
        s.serialize_field("rows", &rows)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            orientation: Orientation,
            alphabet: Alphabet,
            #[serde(default)]
            inner: Option<Partition>,
            rows: Vec<Vec<Letter>>,
        }
        let raw = Raw::deserialize(de)?;
        let rows = raw
            .rows
            .iter()
            .map(|row| {
                if row.iter().any(|l| l.alphabet() != raw.alphabet) {
                    return Err(de::Error::custom(Error::AlphabetMismatch.to_string()));
                }
                Ok(row.iter().map(Letter::value).collect())
            })
            .collect::<std::result::Result<Vec<Vec<i64>>, D::Error>>()?;
        Tableau::from_rows(
            raw.orientation,
            raw.alphabet,
            raw.inner.unwrap_or_else(Partition::empty),
            rows,
        )
        .map_err(|e| de::Error::custom(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn anti_dual(rows: &[&[i64]]) -> Tableau {
        Tableau::from_rows(
            Orientation::AntiNormal,
            Alphabet::NegativeDual,
            Partition::empty(),
            rows.iter().map(|r| r.to_vec()).collect(),
        )
        .unwrap()
    }

    fn anti_pos(rows: &[&[i64]]) -> Tableau {
        Tableau::from_rows(
            Orientation::AntiNormal,
            Alphabet::Positive,
            Partition::empty(),
            rows.iter().map(|r| r.to_vec()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn rejects_bad_fillings() {
        // Decreasing along a row.
        assert!(Tableau::from_rows(
            Orientation::AntiNormal,
            Alphabet::Positive,
            Partition::empty(),
            vec![vec![2, 1]],
        )
        .is_err());
        // Column repeat: entries must strictly grow downward.
        assert!(Tableau::from_rows(
            Orientation::Normal,
            Alphabet::Positive,
            Partition::empty(),
            vec![vec![1, 1], vec![1]],
        )
        .is_err());
        // Longer row above a shorter one is not a partition profile.
        assert!(Tableau::from_rows(
            Orientation::AntiNormal,
            Alphabet::Positive,
            Partition::empty(),
            vec![vec![1], vec![1, 2]],
        )
        .is_err());
    }

    #[test]
    fn skew_anti_layout() {
        // Outer (3,2), inner (1): bottom row misses its rightmost cell.
        let t = Tableau::from_rows(
            Orientation::AntiNormal,
            Alphabet::Positive,
            Partition::new(vec![1]).unwrap(),
            vec![vec![2, 3], vec![1, 2]],
        )
        .unwrap();
        assert_eq!(t.outer().parts(), &[3, 2]);
        assert_eq!(t.size(), 4);
        // Column 1 from the right holds only the top row's rightmost entry.
        let col1: Vec<i64> = t.column_from_right(1).iter().map(Letter::value).collect();
        assert_eq!(col1, vec![2]);
        let col2: Vec<i64> = t.column_from_right(2).iter().map(Letter::value).collect();
        assert_eq!(col2, vec![1, 3]);
        assert_eq!(t.pretty(), "  1 2\n2 3 .");
    }

    #[test]
    fn insertion_bumps_leftward() {
        // Single column: a letter above everything lands on top and stops.
        let t = anti_pos(&[&[2]]);
        let (t2, cell) = t.insert(Letter::positive(1).unwrap()).unwrap();
        assert_eq!(cell, (2, 1));
        assert_eq!(t2.rows(), &[vec![2], vec![1]]);

        // A letter >= the column bottom bumps it to a new column.
        let (t3, cell) = t.insert(Letter::positive(2).unwrap()).unwrap();
        assert_eq!(cell, (1, 2));
        assert_eq!(t3.rows(), &[vec![2, 2]]);
    }

    #[test]
    fn insertion_traces_whole_word() {
        // Inserting -1v -2v -3v -3v -1v -2v -2v one by one; frozen from a
        // hand trace of the column procedure.
        let word = [-1i64, -2, -3, -3, -1, -2, -2];
        let mut t = Tableau::empty(Orientation::AntiNormal, Alphabet::NegativeDual);
        let mut cells = Vec::new();
        for v in word {
            let (next, cell) = t.insert(Letter::new(Alphabet::NegativeDual, v).unwrap()).unwrap();
            t = next;
            cells.push(cell);
        }
        assert_eq!(t.rows(), &[vec![-1, -2, -3, -3], vec![-1, -2, -2]]);
        assert_eq!(
            cells,
            vec![(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2), (2, 3)]
        );
        assert_eq!(t.pretty(), "    -1v -2v -2v\n-1v -2v -3v -3v");
    }

    #[test]
    fn removal_inverts_insertion() {
        let base = anti_dual(&[&[-1, -2, -3, -3], &[-1, -2, -2]]);
        for v in [-1i64, -2, -3, -4] {
            let l = Letter::new(Alphabet::NegativeDual, v).unwrap();
            let (grown, cell) = base.insert(l).unwrap();
            let (back, out) = grown.remove_top(cell.1).unwrap();
            assert_eq!(back, base);
            assert_eq!(out, l);
        }
    }

    #[test]
    fn highest_fillings() {
        let shape = Partition::new(vec![2, 1]).unwrap();
        let h = Tableau::highest(Orientation::Normal, Alphabet::Positive, &shape);
        assert_eq!(h.rows(), &[vec![1, 1], vec![2]]);
        for i in 1..=3 {
            assert_eq!(h.apply(i, Dir::Raise), None);
        }

        let ha = Tableau::highest(Orientation::AntiNormal, Alphabet::Positive, &shape);
        assert_eq!(ha.rows(), &[vec![1, 2], vec![1]]);
        for i in 1..=3 {
            assert_eq!(ha.apply(i, Dir::Raise), None, "index {i}");
        }

        let hd = Tableau::highest(Orientation::AntiNormal, Alphabet::NegativeDual, &shape);
        assert_eq!(hd.rows(), &[vec![-1, -2], vec![-1]]);
        for i in -3..=-1 {
            assert_eq!(hd.apply(i, Dir::Raise), None, "index {i}");
        }
    }

    #[test]
    fn word_reads_rows_from_the_top() {
        let t = anti_dual(&[&[-1, -2, -3, -3], &[-1, -2, -2]]);
        assert_eq!(t.word().values(), &[-2, -2, -1, -3, -3, -2, -1]);

        let n = Tableau::from_rows(
            Orientation::Normal,
            Alphabet::Positive,
            Partition::empty(),
            vec![vec![1, 1], vec![2]],
        )
        .unwrap();
        assert_eq!(n.word().values(), &[1, 1, 2]);
    }

    #[test]
    fn apply_rewrites_one_cell() {
        let t = anti_pos(&[&[1, 2]]);
        let lowered = t.apply(2, Dir::Lower).unwrap();
        assert_eq!(lowered.rows(), &[vec![1, 3]]);
        assert_eq!(lowered.apply(2, Dir::Raise).unwrap(), t);
        // Lowering at 1 would break the row; the word rule routes to the
        // rightmost 1 and stays semistandard.
        let lowered = t.apply(1, Dir::Lower).unwrap();
        assert_eq!(lowered.rows(), &[vec![2, 2]]);
    }

    #[test]
    fn top_cell_edits() {
        let t = anti_pos(&[&[1, 2], &[1]]);
        assert_eq!(t.top_of_column(1).unwrap().value(), 1);
        assert_eq!(t.top_of_column(2).unwrap().value(), 1);
        assert_eq!(t.top_of_column(3), None);

        let grown = t.with_top_added(3, Letter::positive(1).unwrap()).unwrap();
        assert_eq!(grown.rows(), &[vec![1, 1, 2], vec![1]]);
        let (back, letter) = grown.with_top_removed(3).unwrap();
        assert_eq!(back, t);
        assert_eq!(letter.value(), 1);
        // In a full rectangle the top of column 1 is not a corner: its row
        // keeps going to the left.
        let square = anti_pos(&[&[2, 2], &[1, 1]]);
        assert!(square.with_top_removed(1).is_err());
    }

    #[test]
    fn flagged_enumeration_counts() {
        let shape = SkewShape::straight(Partition::new(vec![2, 1]).unwrap());
        let anti = flagged(Orientation::AntiNormal, Alphabet::Positive, &shape, &[2, 2]).unwrap();
        assert_eq!(anti.len(), 2);
        let normal = bounded(Orientation::Normal, Alphabet::Positive, &shape, 2).unwrap();
        assert_eq!(normal.len(), 2);
        // With three letters the hook shape has 8 fillings either way.
        assert_eq!(bounded(Orientation::Normal, Alphabet::Positive, &shape, 3).unwrap().len(), 8);
        assert_eq!(
            bounded(Orientation::AntiNormal, Alphabet::NegativeDual, &shape, 3).unwrap().len(),
            8
        );
        // Row flags act per structural row: the top cell is forced to 1 and
        // sits over the bottom row's rightmost cell, which must exceed it.
        let tight = flagged(Orientation::AntiNormal, Alphabet::Positive, &shape, &[3, 1]).unwrap();
        assert!(tight.iter().all(|t| t.rows()[1] == vec![1]));
        assert_eq!(tight.len(), 5);
    }

    #[test]
    fn serde_roundtrip() {
        let t = anti_dual(&[&[-1, -2, -3, -3], &[-1, -2, -2]]);
        let json = serde_json::to_string(&t).unwrap();
        let back: Tableau = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);

        let skew = Tableau::from_rows(
            Orientation::AntiNormal,
            Alphabet::Positive,
            Partition::new(vec![1]).unwrap(),
            vec![vec![2, 3], vec![1, 2]],
        )
        .unwrap();
        let json = serde_json::to_string(&skew).unwrap();
        let back: Tableau = serde_json::from_str(&json).unwrap();
        assert_eq!(back, skew);
    }
}
