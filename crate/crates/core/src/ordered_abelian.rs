//! Finitely supported vectors over a well-ordered alphabet, ordered
//! lexicographically.
//!
//! The index set is either `ω` (ranks `1, 2, 3, ...`) or `ω+1` (the same
//! ranks followed by a single top index). Integer coordinates give `Z^o`;
//! exact rational coordinates give the `Q^o` group used for the Cayley
//! graph metric.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// Position in the well-ordered alphabet. Every rank sorts below `Top`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum AlphabetIndex {
    Rank(u32),
    Top,
}

impl AlphabetIndex {
    pub fn rank(self) -> Option<u32> {
        match self {
            AlphabetIndex::Rank(r) => Some(r),
            AlphabetIndex::Top => None,
        }
    }

    /// The next index in the well order. `Top` is the last index.
    pub fn successor(self) -> Option<AlphabetIndex> {
        match self {
            AlphabetIndex::Rank(r) => Some(AlphabetIndex::Rank(r + 1)),
            AlphabetIndex::Top => None,
        }
    }
}

impl fmt::Display for AlphabetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphabetIndex::Rank(r) => write!(f, "a{r}"),
            AlphabetIndex::Top => f.write_str("b"),
        }
    }
}

/// Which well-ordered index set is in play.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Alphabet {
    #[default]
    Omega,
    OmegaPlusOne,
}

impl Alphabet {
    pub fn contains(self, index: AlphabetIndex) -> bool {
        match index {
            AlphabetIndex::Rank(r) => r >= 1,
            AlphabetIndex::Top => self == Alphabet::OmegaPlusOne,
        }
    }

    pub fn check<C: Coordinate>(self, x: &LexVector<C>) -> Result<()> {
        match x.support().find(|i| !self.contains(*i)) {
            None => Ok(()),
            Some(i) => Err(Error::Alphabet(format!("index {i} is not in the {self} alphabet"))),
        }
    }

    /// Lexicographic comparison that first checks both vectors live in this
    /// instance.
    pub fn compare<C: Coordinate>(self, x: &LexVector<C>, y: &LexVector<C>) -> Result<Ordering> {
        self.check(x)?;
        self.check(y)?;
        Ok(x.cmp(y))
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alphabet::Omega => f.write_str("omega"),
            Alphabet::OmegaPlusOne => f.write_str("omega+1"),
        }
    }
}

impl FromStr for Alphabet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "omega" | "ω" => Ok(Alphabet::Omega),
            "omega+1" | "ω+1" => Ok(Alphabet::OmegaPlusOne),
            other => Err(Error::Syntax {
                pos: 0,
                msg: format!("unknown alphabet `{other}`, expected omega or omega+1"),
            }),
        }
    }
}

/// Coordinate ring of a [`LexVector`].
pub trait Coordinate:
    Clone
    + Ord
    + Zero
    + Neg<Output = Self>
    + Sub<Output = Self>
    + fmt::Display
    + fmt::Debug
    + FromStr
{
}

impl<T> Coordinate for T where
    T: Clone + Ord + Zero + Neg<Output = T> + Sub<Output = T> + fmt::Display + fmt::Debug + FromStr
{
}

/// A finitely supported vector with lexicographic order. Zero coordinates
/// are never stored, so derived equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LexVector<C> {
    entries: BTreeMap<AlphabetIndex, C>,
}

pub type ZVector = LexVector<i64>;
pub type QVector = LexVector<Rational>;

impl<C: Coordinate> LexVector<C> {
    pub fn zero() -> Self {
        LexVector { entries: BTreeMap::new() }
    }

    pub fn from_entries<I: IntoIterator<Item = (AlphabetIndex, C)>>(entries: I) -> Self {
        let mut out = LexVector::zero();
        for (i, c) in entries {
            out.add_at(i, c);
        }
        out
    }

    /// Coordinates listed from rank 1 upward.
    pub fn from_coords(coords: &[C]) -> Self {
        Self::from_entries(
            coords
                .iter()
                .enumerate()
                .map(|(k, c)| (AlphabetIndex::Rank(k as u32 + 1), c.clone())),
        )
    }

    pub fn get(&self, index: AlphabetIndex) -> C {
        self.entries.get(&index).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_at(&mut self, index: AlphabetIndex, c: C) {
        if c.is_zero() {
            return;
        }
        let sum = self.get(index) + c;
        if sum.is_zero() {
            self.entries.remove(&index);
        } else {
            self.entries.insert(index, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = AlphabetIndex> + '_ {
        self.entries.keys().copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (AlphabetIndex, &C)> + '_ {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    /// Least index carrying a nonzero coordinate.
    pub fn leading_index(&self) -> Option<AlphabetIndex> {
        self.entries.keys().next().copied()
    }

    pub fn signum(&self) -> Ordering {
        match self.entries.values().next() {
            None => Ordering::Equal,
            Some(c) => c.cmp(&C::zero()),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    /// Every stored coordinate is nonnegative.
    pub fn is_componentwise_nonnegative(&self) -> bool {
        self.entries.values().all(|c| *c >= C::zero())
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn lex_min<'a>(&'a self, other: &'a Self) -> &'a Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn map<D: Coordinate>(&self, f: impl Fn(&C) -> D) -> LexVector<D> {
        LexVector::from_entries(self.entries.iter().map(|(i, c)| (*i, f(c))))
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_vector(text)
    }
}

impl ZVector {
    /// Halves the vector when every coordinate is even.
    pub fn half_exact(&self) -> Result<Self> {
        if self.entries.values().any(|c| c % 2 != 0) {
            return Err(Error::Half(self.to_string()));
        }
        Ok(self.map(|c| c / 2))
    }

    pub fn unit(index: AlphabetIndex) -> Self {
        Self::from_entries([(index, 1)])
    }

    pub fn scale(&self, k: i64) -> Self {
        self.map(|c| c * k)
    }

    pub fn to_rational(&self) -> QVector {
        self.map(|c| Rational::from_integer(*c))
    }
}

impl QVector {
    pub fn scale(&self, r: Rational) -> Self {
        self.map(|c| *c * r)
    }

    /// The integer vector with the same coordinates, if all are integral.
    pub fn to_integer(&self) -> Option<ZVector> {
        self.entries
            .iter()
            .map(|(i, c)| c.is_integer().then(|| (*i, c.to_integer())))
            .collect::<Option<Vec<_>>>()
            .map(ZVector::from_entries)
    }
}

impl<C: Coordinate> Ord for LexVector<C> {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.entries.iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some((_, x)), None) => return x.cmp(&&C::zero()),
                (None, Some((_, y))) => return C::zero().cmp(y),
                (Some((i, x)), Some((j, y))) => match i.cmp(j) {
                    Ordering::Less => return x.cmp(&&C::zero()),
                    Ordering::Greater => return C::zero().cmp(y),
                    Ordering::Equal => {
                        let o = x.cmp(y);
                        if o != Ordering::Equal {
                            return o;
                        }
                        a.next();
                        b.next();
                    }
                },
            }
        }
    }
}

impl<C: Coordinate> PartialOrd for LexVector<C> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<C: Coordinate> Add<&LexVector<C>> for &LexVector<C> {
    type Output = LexVector<C>;

    fn add(self, rhs: &LexVector<C>) -> LexVector<C> {
        let mut out = self.clone();
        for (i, c) in &rhs.entries {
            out.add_at(*i, c.clone());
        }
        out
    }
}

impl<C: Coordinate> Add for LexVector<C> {
    type Output = LexVector<C>;

    fn add(self, rhs: LexVector<C>) -> LexVector<C> {
        &self + &rhs
    }
}

impl<C: Coordinate> Neg for &LexVector<C> {
    type Output = LexVector<C>;

    fn neg(self) -> LexVector<C> {
        LexVector {
            entries: self.entries.iter().map(|(i, c)| (*i, -c.clone())).collect(),
        }
    }
}

impl<C: Coordinate> Neg for LexVector<C> {
    type Output = LexVector<C>;

    fn neg(self) -> LexVector<C> {
        -&self
    }
}

impl<C: Coordinate> Sub<&LexVector<C>> for &LexVector<C> {
    type Output = LexVector<C>;

    fn sub(self, rhs: &LexVector<C>) -> LexVector<C> {
        self + &(-rhs)
    }
}

impl<C: Coordinate> Sub for LexVector<C> {
    type Output = LexVector<C>;

    fn sub(self, rhs: LexVector<C>) -> LexVector<C> {
        &self - &rhs
    }
}

impl<C: Coordinate> fmt::Display for LexVector<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let max_rank = self.support().filter_map(AlphabetIndex::rank).max().unwrap_or(0);
        f.write_str("[")?;
        for r in 1..=max_rank {
            if r > 1 {
                f.write_str(",")?;
            }
            write!(f, "{}", self.get(AlphabetIndex::Rank(r)))?;
        }
        if let Some(top) = self.entries.get(&AlphabetIndex::Top) {
            write!(f, ";TOP={top}")?;
        }
        f.write_str("]")
    }
}

impl<C: Coordinate> fmt::Debug for LexVector<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<C: Coordinate> FromStr for LexVector<C> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_vector(s)
    }
}

// Grammar: `[c1,c2,...]`, optionally `[c1,...;TOP=c]`. A `;TOP=c` placed
// after the closing bracket is accepted too.
fn parse_vector<C: Coordinate>(text: &str) -> Result<LexVector<C>> {
    let syntax = |pos: usize, msg: &str| Error::Syntax { pos, msg: msg.to_string() };
    let lead = text.len() - text.trim_start().len();
    let t = text.trim();
    if !t.starts_with('[') {
        return Err(syntax(lead, "vector must start with `[`"));
    }
    let close = t.find(']').ok_or_else(|| syntax(lead + t.len(), "missing `]`"))?;
    let inner = &t[1..close];
    let after = t[close + 1..].trim();

    let (body, mut top) = match inner.split_once(';') {
        Some((b, rest)) => (b, Some((rest, lead + 1 + b.len() + 1))),
        None => (inner, None),
    };
    if !after.is_empty() {
        if top.is_some() {
            return Err(syntax(lead + close + 1, "unexpected trailing text"));
        }
        let rest = after.strip_prefix(';').ok_or_else(|| syntax(lead + close + 1, "unexpected trailing text"))?;
        top = Some((rest, lead + close + 2));
    }

    let mut out = LexVector::zero();
    if !body.trim().is_empty() {
        let mut col = lead + 1;
        for (k, piece) in body.split(',').enumerate() {
            let c: C = piece
                .trim()
                .parse()
                .map_err(|_| syntax(col, &format!("bad coordinate `{}`", piece.trim())))?;
            out.add_at(AlphabetIndex::Rank(k as u32 + 1), c);
            col += piece.len() + 1;
        }
    }
    if let Some((rest, col)) = top {
        let value = rest
            .trim()
            .strip_prefix("TOP=")
            .ok_or_else(|| syntax(col, "expected `TOP=<c>`"))?;
        let c: C = value
            .trim()
            .parse()
            .map_err(|_| syntax(col, &format!("bad coordinate `{}`", value.trim())))?;
        out.add_at(AlphabetIndex::Top, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> ZVector {
        ZVector::from_coords(c)
    }

    /// All vectors supported on ranks 1..=3 with entries in -2..=2.
    fn small_vectors() -> Vec<ZVector> {
        let mut out = Vec::new();
        for a in -2..=2 {
            for b in -2..=2 {
                for c in -2..=2 {
                    out.push(z(&[a, b, c]));
                }
            }
        }
        out
    }

    #[test]
    fn compare_examples() {
        assert_eq!(z(&[]).cmp(&z(&[])), Ordering::Equal);
        assert_eq!(z(&[1, -1]).cmp(&z(&[1])), Ordering::Less);
        assert_eq!(z(&[0, 2]).cmp(&z(&[1, -5])), Ordering::Less);
    }

    #[test]
    fn top_sorts_after_every_rank() {
        let top = ZVector::unit(AlphabetIndex::Top);
        assert!(top > ZVector::zero());
        assert!(top < z(&[0, 0, 0, 0, 0, 0, 0, 1]));
        assert!(AlphabetIndex::Rank(u32::MAX) < AlphabetIndex::Top);
    }

    #[test]
    fn mixed_instance_is_rejected() {
        let top = ZVector::unit(AlphabetIndex::Top);
        assert!(matches!(Alphabet::Omega.compare(&top, &z(&[1])), Err(Error::Alphabet(_))));
        assert_eq!(Alphabet::OmegaPlusOne.compare(&top, &z(&[1])), Ok(Ordering::Less));
    }

    #[test]
    fn add_examples() {
        assert_eq!(&z(&[1, 2]) + &z(&[0, -2]), z(&[1]));
        assert_eq!(&z(&[3, 0, 1]) + &z(&[]), z(&[3, 0, 1]));
        assert_eq!(&z(&[1]) + &z(&[-1, 1]), z(&[0, 1]));
        let x = z(&[4, -1, 7]);
        assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn abs_examples() {
        assert_eq!(z(&[]).abs(), z(&[]));
        assert_eq!(z(&[-1, 5]).abs(), z(&[1, -5]));
        assert_eq!(z(&[0, 3]).abs(), z(&[0, 3]));
    }

    #[test]
    fn half_examples() {
        assert_eq!(z(&[2, -4]).half_exact(), Ok(z(&[1, -2])));
        assert_eq!(z(&[]).half_exact(), Ok(z(&[])));
        assert!(matches!(z(&[1]).half_exact(), Err(Error::Half(_))));
    }

    #[test]
    fn total_order_axioms_exhaustive() {
        let vs = small_vectors();
        for x in &vs {
            for y in &vs {
                let xy = x.cmp(y);
                assert_eq!(xy, y.cmp(x).reverse());
                assert_eq!(xy == Ordering::Equal, x == y);
            }
        }
        // transitivity on a thinned cube keeps this under a second
        for x in vs.iter().step_by(3) {
            for y in vs.iter().step_by(2) {
                if x > y {
                    continue;
                }
                for w in &vs {
                    if y <= w {
                        assert!(x <= w, "{x} <= {y} <= {w}");
                    }
                }
            }
        }
    }

    #[test]
    fn translation_invariance_exhaustive() {
        let vs = small_vectors();
        let shifts: Vec<_> = vs.iter().step_by(7).cloned().collect();
        for x in &vs {
            for y in vs.iter().step_by(5) {
                for s in &shifts {
                    assert_eq!(x.cmp(y), (x + s).cmp(&(y + s)));
                }
            }
        }
    }

    #[test]
    fn abs_properties_exhaustive() {
        let vs = small_vectors();
        for x in &vs {
            assert!(x.abs() >= ZVector::zero());
            assert_eq!(x.abs().is_zero(), x.is_zero());
            assert_eq!(x.abs(), (-x).abs());
            assert_eq!((x + x).half_exact().as_ref(), Ok(x));
            for y in vs.iter().step_by(4) {
                assert!((x + y).abs() <= &x.abs() + &y.abs());
            }
        }
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(z(&[]).to_string(), "[]");
        assert_eq!(z(&[1, -1, 0]).to_string(), "[1,-1]");
        assert_eq!(z(&[0, 0, 3]).to_string(), "[0,0,3]");
        let mut v = z(&[2]);
        v.add_at(AlphabetIndex::Top, -1);
        assert_eq!(v.to_string(), "[2;TOP=-1]");
        assert_eq!("[2;TOP=-1]".parse::<ZVector>(), Ok(v.clone()));
        assert_eq!("[2] ;TOP=-1".parse::<ZVector>(), Ok(v));
        assert_eq!(" [ 1 , 0 , -4 ] ".parse::<ZVector>(), Ok(z(&[1, 0, -4])));
        assert!("[1,x]".parse::<ZVector>().is_err());
        assert!("1,2".parse::<ZVector>().is_err());

        let q: QVector = "[1/2,-3/4]".parse().unwrap();
        assert_eq!(q.get(AlphabetIndex::Rank(1)), Rational::new(1, 2));
        assert_eq!(q.to_string(), "[1/2,-3/4]");
        assert_eq!(q.to_integer(), None);
        assert_eq!(z(&[3, -1]).to_rational().to_integer(), Some(z(&[3, -1])));
    }
}
