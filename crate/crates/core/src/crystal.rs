//! The four letter crystals, integer weights, and words with the tensor rule.
//!
//! Alphabets:
//! * `Full`: all nonzero integers, chained `... -> -2 -> -1 -> 1 -> 2 -> ...`
//!   with the arrow out of `k` colored `k` for `k > 0`, the arrow into `k`
//!   colored `k` for `k < 0`, and the arrow `-1 -> 1` colored `0`.
//! * `Positive` / `Negative`: the one-sided restrictions.
//! * `NegativeDual`: letters `-1v < -2v < ...` (value `-k` encodes `-kv`) with
//!   arrows `-kv -> -(k+1)v` colored `-k` and weight `wt(-kv) = -eps(-k)`.
//!
//! Words are homogeneous sequences of letters read as left-to-right tensor
//! products. Operator routing uses the bracketing form of the tensor rule:
//! each factor contributes `eps` minus signs then `phi` plus signs, adjacent
//! `+-` pairs cancel, a raise acts at the rightmost surviving minus and a
//! lower at the leftmost surviving plus.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Alphabet {
    Full,
    Positive,
    Negative,
    NegativeDual,
}

impl Alphabet {
    fn admits(self, value: i64) -> bool {
        match self {
            Alphabet::Full => value != 0,
            Alphabet::Positive => value > 0,
            Alphabet::Negative | Alphabet::NegativeDual => value < 0,
        }
    }
}

/// Raising or lowering direction for every crystal operator in the library.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dir {
    Raise,
    Lower,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    alphabet: Alphabet,
    value: i64,
}

impl Letter {
    pub fn new(alphabet: Alphabet, value: i64) -> Result<Self> {
        if !alphabet.admits(value) {
            return Err(Error::BadLetter(value, alphabet));
        }
        Ok(Letter { alphabet, value })
    }

    pub fn full(value: i64) -> Result<Self> {
        Letter::new(Alphabet::Full, value)
    }

    pub fn positive(value: i64) -> Result<Self> {
        Letter::new(Alphabet::Positive, value)
    }

    /// The dual letter `-kv` for `k >= 1`.
    pub fn dual(k: u32) -> Self {
        Letter { alphabet: Alphabet::NegativeDual, value: -(k as i64) }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn value(&self) -> i64 {
        self.value
    }

    pub fn weight(&self) -> Weight {
        match self.alphabet {
            Alphabet::NegativeDual => Weight::unit(self.value) * -1,
            _ => Weight::unit(self.value),
        }
    }

    /// Comparison in the alphabet order; errors across alphabets.
    pub fn order(&self, other: &Letter) -> Result<Ordering> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        Ok(self.rank().cmp(&other.rank()))
    }

    /// Strictly increasing key realizing the alphabet order.
    pub(crate) fn rank(&self) -> i64 {
        match self.alphabet {
            Alphabet::NegativeDual => -self.value,
            _ => self.value,
        }
    }

    pub fn apply(&self, i: i64, dir: Dir) -> Option<Letter> {
        match dir {
            Dir::Raise => self.raised(i),
            Dir::Lower => self.lowered(i),
        }
    }

    pub fn lowered(&self, i: i64) -> Option<Letter> {
        let v = self.value;
        let next = match self.alphabet {
            Alphabet::Full => match i.cmp(&0) {
                Ordering::Equal => (v == -1).then_some(1),
                Ordering::Greater => (v == i).then_some(i + 1),
                Ordering::Less => (v == i - 1).then_some(i),
            },
            Alphabet::Positive => (i > 0 && v == i).then_some(i + 1),
            Alphabet::Negative => (i < 0 && v == i - 1).then_some(i),
            Alphabet::NegativeDual => (i < 0 && v == i).then_some(i - 1),
        }?;
        Some(Letter { alphabet: self.alphabet, value: next })
    }

    pub fn raised(&self, i: i64) -> Option<Letter> {
        let v = self.value;
        let prev = match self.alphabet {
            Alphabet::Full => match i.cmp(&0) {
                Ordering::Equal => (v == 1).then_some(-1),
                Ordering::Greater => (v == i + 1).then_some(i),
                Ordering::Less => (v == i).then_some(i - 1),
            },
            Alphabet::Positive => (i > 0 && v == i + 1).then_some(i),
            Alphabet::Negative => (i < 0 && v == i).then_some(i - 1),
            Alphabet::NegativeDual => (i < 0 && v == i - 1).then_some(i),
        }?;
        Some(Letter { alphabet: self.alphabet, value: prev })
    }

    pub fn eps(&self, i: i64) -> u32 {
        self.raised(i).is_some() as u32
    }

    pub fn phi(&self, i: i64) -> u32 {
        self.lowered(i).is_some() as u32
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.alphabet == Alphabet::NegativeDual {
            write!(f, "{}v", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        if self.alphabet == Alphabet::NegativeDual {
            let mut map = ser.serialize_map(Some(2))?;
            map.serialize_entry("value", &self.value)?;
            map.serialize_entry("dual", &true)?;
            map.end()
        } else {
            ser.serialize_i64(self.value)
        }
    }
}

impl<'de> Deserialize<'de> for Letter {
    /// Bare integers become `Positive`/`Negative` letters by sign; objects
    /// with `"dual": true` become dual letters.
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Plain(i64),
            Tagged { value: i64, #[serde(default)] dual: bool },
        }
        let (value, dual) = match Raw::deserialize(de)? {
            Raw::Plain(v) => (v, false),
            Raw::Tagged { value, dual } => (value, dual),
        };
        let alphabet = if dual {
            Alphabet::NegativeDual
        } else if value > 0 {
            Alphabet::Positive
        } else {
            Alphabet::Negative
        };
        Letter::new(alphabet, value).map_err(|e| de::Error::custom(e.to_string()))
    }
}

/// An element of the weight lattice: an integer multiple of the level weight
/// plus a finite combination of coordinate weights `eps(i)`, `i` nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    level: i64,
    eps: BTreeMap<i64, i64>,
}

impl Weight {
    pub fn zero() -> Self {
        Weight::default()
    }

    /// `n` times the level weight (the weight paired to 1 by the zeroth
    /// coroot and to 0 by all others).
    pub fn level(n: i64) -> Self {
        Weight { level: n, eps: BTreeMap::new() }
    }

    /// The coordinate weight `eps(i)`.
    pub fn unit(i: i64) -> Self {
        assert!(i != 0, "coordinate weights are indexed by nonzero integers");
        Weight { level: 0, eps: BTreeMap::from([(i, 1)]) }
    }

    /// The simple root `alpha(i)`.
    pub fn simple_root(i: i64) -> Self {
        match i.cmp(&0) {
            Ordering::Equal => Weight::unit(-1) - Weight::unit(1),
            Ordering::Greater => Weight::unit(i) - Weight::unit(i + 1),
            Ordering::Less => Weight::unit(i - 1) - Weight::unit(i),
        }
    }

    pub fn level_coeff(&self) -> i64 {
        self.level
    }

    pub fn eps_coeff(&self, i: i64) -> i64 {
        self.eps.get(&i).copied().unwrap_or(0)
    }

    pub fn eps_support(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.eps.iter().map(|(&i, &c)| (i, c))
    }

    /// Pairing with the coroot of index `i`.
    pub fn pairing(&self, i: i64) -> i64 {
        let from_eps = match i.cmp(&0) {
            Ordering::Equal => self.eps_coeff(-1) - self.eps_coeff(1),
            Ordering::Greater => self.eps_coeff(i) - self.eps_coeff(i + 1),
            Ordering::Less => self.eps_coeff(i - 1) - self.eps_coeff(i),
        };
        from_eps + if i == 0 { self.level } else { 0 }
    }

    fn prune(mut self) -> Self {
        self.eps.retain(|_, c| *c != 0);
        self
    }
}

impl std::ops::Add for Weight {
    type Output = Weight;
    fn add(mut self, rhs: Weight) -> Weight {
        self.level += rhs.level;
        for (i, c) in rhs.eps {
            *self.eps.entry(i).or_insert(0) += c;
        }
        self.prune()
    }
}

impl std::ops::Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        self + rhs * -1
    }
}

impl std::ops::Mul<i64> for Weight {
    type Output = Weight;
    fn mul(mut self, rhs: i64) -> Weight {
        self.level *= rhs;
        for c in self.eps.values_mut() {
            *c *= rhs;
        }
        self.prune()
    }
}

impl std::ops::AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        *self = self.clone() + rhs;
    }
}

/// Outcome of evaluating the bracketing rule over a sequence of factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Routing {
    pub eps: u32,
    pub phi: u32,
    /// Factor holding the rightmost unmatched minus.
    pub raise_at: Option<usize>,
    /// Factor holding the leftmost surviving plus.
    pub lower_at: Option<usize>,
}

/// Evaluates the iterated tensor rule on factors given as `(eps, phi)` pairs.
pub(crate) fn route(parts: impl IntoIterator<Item = (u32, u32)>) -> Routing {
    let mut stack: Vec<(usize, u32)> = Vec::new();
    let mut unmatched_minus = 0u32;
    let mut raise_at = None;
    for (idx, (eps, phi)) in parts.into_iter().enumerate() {
        let mut need = eps;
        while need > 0 {
            match stack.last_mut() {
                Some((_, count)) => {
                    let used = need.min(*count);
                    *count -= used;
                    need -= used;
                    if *count == 0 {
                        stack.pop();
                    }
                }
                None => {
                    unmatched_minus += need;
                    raise_at = Some(idx);
                    need = 0;
                }
            }
        }
        if phi > 0 {
            stack.push((idx, phi));
        }
    }
    Routing {
        eps: unmatched_minus,
        phi: stack.iter().map(|&(_, c)| c).sum(),
        raise_at,
        lower_at: stack.first().map(|&(idx, _)| idx),
    }
}

pub(crate) fn route_target(routing: &Routing, dir: Dir) -> Option<usize> {
    match dir {
        Dir::Raise => routing.raise_at,
        Dir::Lower => routing.lower_at,
    }
}

/// A homogeneous word, read as the tensor product of its letters.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    alphabet: Alphabet,
    values: Vec<i64>,
}

impl Word {
    pub fn new(alphabet: Alphabet, values: Vec<i64>) -> Result<Self> {
        if let Some(&v) = values.iter().find(|&&v| !alphabet.admits(v)) {
            return Err(Error::BadLetter(v, alphabet));
        }
        Ok(Word { alphabet, values })
    }

    pub fn from_letters(alphabet: Alphabet, letters: &[Letter]) -> Result<Self> {
        if letters.iter().any(|l| l.alphabet() != alphabet) {
            return Err(Error::AlphabetMismatch);
        }
        Ok(Word { alphabet, values: letters.iter().map(|l| l.value()).collect() })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn letter(&self, idx: usize) -> Letter {
        Letter { alphabet: self.alphabet, value: self.values[idx] }
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.values.iter().map(|&v| Letter { alphabet: self.alphabet, value: v })
    }

    pub fn weight(&self) -> Weight {
        let mut w = Weight::zero();
        for l in self.letters() {
            w += l.weight();
        }
        w
    }

    fn routing(&self, i: i64) -> Routing {
        route(self.letters().map(|l| (l.eps(i), l.phi(i))))
    }

    pub fn eps(&self, i: i64) -> u32 {
        self.routing(i).eps
    }

    pub fn phi(&self, i: i64) -> u32 {
        self.routing(i).phi
    }

    pub fn apply(&self, i: i64, dir: Dir) -> Option<Word> {
        self.apply_at(i, dir).map(|(w, _)| w)
    }

    /// Applies an operator and reports the position of the changed letter.
    pub fn apply_at(&self, i: i64, dir: Dir) -> Option<(Word, usize)> {
        let idx = route_target(&self.routing(i), dir)?;
        let new = self.letter(idx).apply(i, dir)?;
        let mut values = self.values.clone();
        values[idx] = new.value();
        Some((Word { alphabet: self.alphabet, values }, idx))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in self.letters() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_seq(self.letters())
    }
}

/// The rank-one crystal `{t}` of a fixed weight: both string lengths are
/// formally minus infinity, so in a tensor product every operator passes over
/// it and only the weight is affected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightShifter {
    shift: Weight,
}

impl WeightShifter {
    pub fn new(shift: Weight) -> Self {
        WeightShifter { shift }
    }

    pub fn shift(&self) -> &Weight {
        &self.shift
    }
}

/// A word tensored with a shifter on the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedWord {
    pub word: Word,
    pub shifter: WeightShifter,
}

impl ShiftedWord {
    pub fn weight(&self) -> Weight {
        self.word.weight() + self.shifter.shift().clone()
    }

    pub fn eps(&self, i: i64) -> i64 {
        self.word.eps(i) as i64
    }

    pub fn phi(&self, i: i64) -> i64 {
        self.word.phi(i) as i64 + self.shifter.shift().pairing(i)
    }

    pub fn apply(&self, i: i64, dir: Dir) -> Option<ShiftedWord> {
        Some(ShiftedWord { word: self.word.apply(i, dir)?, shifter: self.shifter.clone() })
    }
}
