//! Words over the signed alphabet, free reduction, the cancellation calculus
//! and the `Z^o` length function.
//!
//! Only finite words are represented exactly. Infinite words enter through
//! [`WordStream`], whose truncations are ordinary finite words.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ordered_abelian::{Alphabet, AlphabetIndex, ZVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// A generator or its formal inverse. Letters order by index, then `a` before
/// `a^-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub index: AlphabetIndex,
    pub sign: Sign,
}

impl Letter {
    pub fn new(index: AlphabetIndex, sign: Sign) -> Self {
        Letter { index, sign }
    }

    /// `a<rank>`.
    pub fn gen(rank: u32) -> Self {
        Letter::new(AlphabetIndex::Rank(rank), Sign::Pos)
    }

    /// `a<rank>^-1`.
    pub fn gen_inv(rank: u32) -> Self {
        Letter::new(AlphabetIndex::Rank(rank), Sign::Neg)
    }

    /// The top letter `b` of the `ω+1` alphabet.
    pub fn top() -> Self {
        Letter::new(AlphabetIndex::Top, Sign::Pos)
    }

    pub fn inverse(self) -> Self {
        Letter { index: self.index, sign: self.sign.flip() }
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.index == other.index && self.sign != other.sign
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index)?;
        if self.sign == Sign::Neg {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

/// A finite word. `reduced` certifies that no adjacent pair cancels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
    reduced: bool,
}

impl Default for Word {
    fn default() -> Self {
        Word::identity()
    }
}

fn has_adjacent_cancellation(letters: &[Letter]) -> bool {
    letters.windows(2).any(|p| p[0].cancels(p[1]))
}

impl Word {
    /// The empty word `ι`.
    pub fn identity() -> Self {
        Word { letters: Vec::new(), reduced: true }
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        let reduced = !has_adjacent_cancellation(&letters);
        Word { letters, reduced }
    }

    /// Shorthand for tests and examples: positive entries are `a<k>`,
    /// negative ones `a<k>^-1`.
    pub fn from_ranks(ranks: &[i32]) -> Self {
        Self::from_letters(
            ranks
                .iter()
                .map(|&r| {
                    assert!(r != 0, "rank 0 is not a letter");
                    let sign = if r > 0 { Sign::Pos } else { Sign::Neg };
                    Letter::new(AlphabetIndex::Rank(r.unsigned_abs()), sign)
                })
                .collect(),
        )
    }

    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        parse_word(text, alphabet)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn require_reduced(&self) -> Result<&Self> {
        if self.reduced {
            Ok(self)
        } else {
            Err(Error::Unreduced(self.to_string()))
        }
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    pub fn ends_with(&self, letter: Letter) -> bool {
        self.last() == Some(letter)
    }

    /// The first `k` letters.
    pub fn prefix(&self, k: usize) -> Word {
        Word { letters: self.letters[..k].to_vec(), reduced: self.reduced || !has_adjacent_cancellation(&self.letters[..k]) }
    }

    pub fn alphabet_check(&self, alphabet: Alphabet) -> Result<()> {
        match self.letters.iter().find(|l| !alphabet.contains(l.index)) {
            None => Ok(()),
            Some(l) => Err(Error::Alphabet(format!("letter {l} is not in the {alphabet} alphabet"))),
        }
    }

    /// Juxtaposition without reduction.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word::from_letters(letters)
    }

    /// The unique reduced representative, by one left-to-right stack pass.
    pub fn reduce(&self) -> Word {
        if self.reduced {
            return self.clone();
        }
        let mut stack: Vec<Letter> = Vec::with_capacity(self.len());
        for &x in &self.letters {
            if stack.last().is_some_and(|y| y.cancels(x)) {
                stack.pop();
            } else {
                stack.push(x);
            }
        }
        Word { letters: stack, reduced: true }
    }

    /// Reduced product.
    pub fn multiply(&self, other: &Word) -> Word {
        let mut stack = self.reduce().letters;
        for &x in &other.reduce().letters {
            if stack.last().is_some_and(|y| y.cancels(x)) {
                stack.pop();
            } else {
                stack.push(x);
            }
        }
        Word { letters: stack, reduced: true }
    }

    pub fn times(&self, letter: Letter) -> Word {
        self.multiply(&Word::from_letters(vec![letter]))
    }

    /// Reverses the order and inverts every letter.
    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
            reduced: self.reduced,
        }
    }

    /// `L(w)`: per index, the number of occurrences of `a` and `a^-1` in the
    /// reduced form.
    pub fn length(&self) -> ZVector {
        let reduced = self.reduce();
        ZVector::from_entries(reduced.letters.iter().map(|l| (l.index, 1)))
    }

    /// Largest index used by the word.
    pub fn max_index(&self) -> Option<AlphabetIndex> {
        self.letters.iter().map(|l| l.index).max()
    }

    /// The initial segments `ι, w_1, w_1 w_2, ..., w`, in increasing order.
    pub fn subwords(&self) -> Result<Vec<Word>> {
        self.require_reduced()?;
        Ok((0..=self.len()).map(|k| self.prefix(k)).collect())
    }

    /// `v` is a subword of `w` when `L(v) + L(v^-1 w) = L(w)`.
    pub fn is_subword_of(&self, w: &Word) -> Result<bool> {
        self.require_reduced()?;
        w.require_reduced()?;
        Ok(&self.length() + &word_dist(self, w) == w.length())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("ι");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `d(w, v) = L(w^-1 v)`.
pub fn word_dist(w: &Word, v: &Word) -> ZVector {
    w.inverse().multiply(v).length()
}

/// Gromov product at `ι`: `½(L(g) + L(h) - L(g^-1 h))`.
///
/// For the big free group this always lies in `Z^o`; an odd coordinate here
/// would mean the length function is broken.
pub fn gromov(g: &Word, h: &Word) -> ZVector {
    let doubled = &(&g.length() + &h.length()) - &word_dist(g, h);
    doubled
        .half_exact()
        .expect("Gromov product of big free group words must lie in Z^o")
}

/// Longest common initial segment of two reduced words.
pub fn common_prefix(g: &Word, h: &Word) -> Result<Word> {
    g.require_reduced()?;
    h.require_reduced()?;
    let k = g
        .letters
        .iter()
        .zip(&h.letters)
        .take_while(|(x, y)| x == y)
        .count();
    Ok(g.prefix(k))
}

// Grammar: whitespace-separated `a<k>`, `a<k>^<e>`, `b`, `b^<e>`; `ι` is
// accepted as an explicit empty token.
fn parse_word(text: &str, alphabet: Alphabet) -> Result<Word> {
    let mut letters = Vec::new();
    let mut offset = 0;
    for token in text.split_whitespace() {
        let col = text[offset..].find(token).map(|p| offset + p).unwrap_or(offset);
        offset = col + token.len();
        let pos = text[..col].chars().count() + 1;
        if token == "ι" {
            continue;
        }
        let (base, exp) = match token.split_once('^') {
            Some((b, e)) => {
                let e: i64 = e.parse().map_err(|_| Error::Syntax {
                    pos,
                    msg: format!("bad exponent in `{token}`"),
                })?;
                (b, e)
            }
            None => (token, 1),
        };
        if exp == 0 {
            return Err(Error::ZeroExponent { pos });
        }
        let index = if base == "b" {
            if alphabet != Alphabet::OmegaPlusOne {
                return Err(Error::Alphabet(format!(
                    "letter `b` at column {pos} needs the omega+1 alphabet"
                )));
            }
            AlphabetIndex::Top
        } else {
            let rank = base
                .strip_prefix('a')
                .and_then(|k| k.parse::<u32>().ok())
                .filter(|k| *k >= 1)
                .ok_or_else(|| Error::Syntax {
                    pos,
                    msg: format!("expected a<k> with k >= 1 or b, found `{token}`"),
                })?;
            AlphabetIndex::Rank(rank)
        };
        let sign = if exp > 0 { Sign::Pos } else { Sign::Neg };
        for _ in 0..exp.unsigned_abs() {
            letters.push(Letter::new(index, sign));
        }
    }
    Ok(Word::from_letters(letters))
}

/// Why a proposed pairing is not a cancellation. Positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CancellationViolation {
    /// Some position strictly between `t` and its partner is left unpaired.
    Complete { t: usize, partner: usize, gap: usize },
    /// A paired position between `t` and its partner has its own partner
    /// outside that interval.
    Noncrossing { t: usize, partner: usize, witness: usize, witness_partner: usize },
    /// `w(t*) != w(t)^-1`.
    InversePairing { t: usize, partner: usize },
}

impl fmt::Display for CancellationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CancellationViolation::Complete { t, partner, gap } => write!(
                f,
                "not complete at t={t} (partner {partner}): position {gap} is unpaired"
            ),
            CancellationViolation::Noncrossing { t, partner, witness, witness_partner } => write!(
                f,
                "not noncrossing at t={t} (partner {partner}): position {witness} pairs with {witness_partner}"
            ),
            CancellationViolation::InversePairing { t, partner } => write!(
                f,
                "not an inverse pairing at t={t}: letter at {partner} is not the inverse"
            ),
        }
    }
}

/// An involution on a set of word positions, stored as 1-based pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Cancellation {
    pairs: Vec<(usize, usize)>,
}

impl Cancellation {
    pub fn new(pairs: Vec<(usize, usize)>) -> Self {
        Cancellation { pairs }
    }

    pub fn empty() -> Self {
        Cancellation::default()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Parses `i-j,k-l,...`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        let mut col = 1;
        for piece in text.split(',') {
            let trimmed = piece.trim();
            if trimmed.is_empty() {
                if text.trim().is_empty() {
                    break;
                }
                return Err(Error::Syntax { pos: col, msg: "empty pair".into() });
            }
            let (a, b) = trimmed
                .split_once('-')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
                .ok_or_else(|| Error::Syntax {
                    pos: col,
                    msg: format!("expected `i-j`, found `{trimmed}`"),
                })?;
            pairs.push((a, b));
            col += piece.chars().count() + 1;
        }
        Ok(Cancellation { pairs })
    }

    /// Partner table indexed by 1-based position (index 0 unused).
    fn partner_table(&self, len: usize) -> Result<Vec<Option<usize>>> {
        let mut partner = vec![None; len + 1];
        for &(a, b) in &self.pairs {
            for p in [a, b] {
                if p == 0 || p > len {
                    return Err(Error::PositionOutOfRange { pos: p, len });
                }
            }
            if a == b {
                return Err(Error::MalformedCancellation(format!("position {a} is paired with itself")));
            }
            for p in [a, b] {
                if partner[p].is_some() {
                    return Err(Error::MalformedCancellation(format!("position {p} is paired twice")));
                }
            }
            partner[a] = Some(b);
            partner[b] = Some(a);
        }
        Ok(partner)
    }

    /// Checks the pairing is complete, noncrossing and an inverse pairing on
    /// `w`, reporting the first failure in position order.
    pub fn verify(&self, w: &Word) -> Result<()> {
        let partner = self.partner_table(w.len())?;
        for t in 1..=w.len() {
            let Some(s) = partner[t] else { continue };
            let (lo, hi) = (t.min(s), t.max(s));
            if let Some(gap) = (lo..=hi).find(|&r| partner[r].is_none()) {
                return Err(Error::InvalidCancellation(CancellationViolation::Complete {
                    t,
                    partner: s,
                    gap,
                }));
            }
            if let Some(r) = (lo..=hi).find(|&r| partner[r].is_some_and(|q| q < lo || q > hi)) {
                return Err(Error::InvalidCancellation(CancellationViolation::Noncrossing {
                    t,
                    partner: s,
                    witness: r,
                    witness_partner: partner[r].unwrap(),
                }));
            }
            if !w.letters[t - 1].cancels(w.letters[s - 1]) {
                return Err(Error::InvalidCancellation(CancellationViolation::InversePairing {
                    t,
                    partner: s,
                }));
            }
        }
        Ok(())
    }

    /// The restriction of `w` to the unpaired positions.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        self.verify(w)?;
        let partner = self.partner_table(w.len())?;
        Ok(Word::from_letters(
            w.letters
                .iter()
                .enumerate()
                .filter(|(k, _)| partner[k + 1].is_none())
                .map(|(_, l)| *l)
                .collect(),
        ))
    }
}

impl fmt::Display for Cancellation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (a, b)) in self.pairs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}-{b}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// Order type ω: `w_1 w_2 w_3 ...`.
    Forward,
    /// Order type ω*: `... w_3 w_2 w_1`.
    Reverse,
}

/// An infinite word given by a rule `k -> letter` (k >= 1), accessed only
/// through finite truncations.
#[derive(Clone)]
pub struct WordStream {
    rule: Arc<dyn Fn(u64) -> Letter + Send + Sync>,
    orientation: Orientation,
    multiplicity_bound: usize,
}

impl WordStream {
    /// `multiplicity_bound` certifies how often any single letter may occur.
    pub fn new(
        rule: impl Fn(u64) -> Letter + Send + Sync + 'static,
        orientation: Orientation,
        multiplicity_bound: usize,
    ) -> Self {
        WordStream { rule: Arc::new(rule), orientation, multiplicity_bound }
    }

    /// `a_1 a_2 a_3 ...`
    pub fn harmonic() -> Self {
        WordStream::new(|k| Letter::gen(k as u32), Orientation::Forward, 1)
    }

    /// `... a_3 a_2 a_1`
    pub fn harmonic_reversed() -> Self {
        WordStream::new(|k| Letter::gen(k as u32), Orientation::Reverse, 1)
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn multiplicity_bound(&self) -> usize {
        self.multiplicity_bound
    }

    pub fn letter(&self, k: u64) -> Letter {
        (self.rule)(k)
    }

    /// The first `k` letters in stream order. For a reverse stream this is
    /// `rule(k) ... rule(2) rule(1)`.
    pub fn truncate(&self, k: u64) -> Word {
        let letters: Vec<Letter> = match self.orientation {
            Orientation::Forward => (1..=k).map(|i| self.letter(i)).collect(),
            Orientation::Reverse => (1..=k).rev().map(|i| self.letter(i)).collect(),
        };
        Word::from_letters(letters)
    }

    /// Checks the multiplicity certificate on the first `depth` positions.
    pub fn multiplicity_holds_to(&self, depth: u64) -> bool {
        let mut counts = std::collections::HashMap::new();
        (1..=depth).all(|k| {
            let c = counts.entry(self.letter(k).index).or_insert(0usize);
            *c += 1;
            *c <= self.multiplicity_bound
        })
    }
}

impl fmt::Debug for WordStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WordStream")
            .field("orientation", &self.orientation)
            .field("multiplicity_bound", &self.multiplicity_bound)
            .finish_non_exhaustive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordered_abelian::ZVector;

    fn w(s: &str) -> Word {
        Word::parse(s, Alphabet::Omega).unwrap()
    }

    fn z(c: &[i64]) -> ZVector {
        ZVector::from_coords(c)
    }

    /// Deletes adjacent cancelling pairs in every possible order and
    /// collects the terminal words.
    fn all_deletion_results(word: &[Letter], out: &mut std::collections::HashSet<Vec<Letter>>) {
        let mut terminal = true;
        for i in 0..word.len().saturating_sub(1) {
            if word[i].cancels(word[i + 1]) {
                terminal = false;
                let mut next = word.to_vec();
                next.drain(i..i + 2);
                all_deletion_results(&next, out);
            }
        }
        if terminal {
            out.insert(word.to_vec());
        }
    }

    #[test]
    fn parse_examples() {
        assert_eq!(w("a1 a2^-1").letters(), &[Letter::gen(1), Letter::gen_inv(2)]);
        assert!(w("").is_identity());
        assert_eq!(Word::default(), Word::identity());
        assert_eq!(w("a3^2").letters(), &[Letter::gen(3), Letter::gen(3)]);
        assert_eq!(w("a2^-2").to_string(), "a2^-1 a2^-1");
        // parsing never reduces
        assert_eq!(w("a1 a1^-1").len(), 2);
        assert!(!w("a1 a1^-1").is_reduced());
    }

    #[test]
    fn parse_errors() {
        assert_eq!(Word::parse("a1 a2^0", Alphabet::Omega), Err(Error::ZeroExponent { pos: 4 }));
        assert!(matches!(Word::parse("a0", Alphabet::Omega), Err(Error::Syntax { pos: 1, .. })));
        assert!(matches!(Word::parse("a1 x", Alphabet::Omega), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(Word::parse("a1^z", Alphabet::Omega), Err(Error::Syntax { .. })));
        assert!(matches!(Word::parse("b", Alphabet::Omega), Err(Error::Alphabet(_))));
        assert_eq!(Word::parse("b^-1 a1", Alphabet::OmegaPlusOne).unwrap().to_string(), "b^-1 a1");
    }

    #[test]
    fn display_round_trip() {
        for s in ["ι", "a1", "a1 a2^-1 a3 a3", "a10^-1"] {
            assert_eq!(w(s).to_string(), s);
        }
        assert_eq!(w("  a1   a2 ").to_string(), "a1 a2");
    }

    #[test]
    fn reduce_examples() {
        assert!(w("a1 a1^-1").reduce().is_identity());
        assert_eq!(w("a1 a2 a2^-1 a1").reduce(), w("a1 a1"));
        assert_eq!(w("a2^-1 a1 a1^-1 a2 a3").reduce(), w("a3"));
    }

    #[test]
    fn reduce_matches_every_deletion_order() {
        for s in ["a2^-1 a1 a1^-1 a2 a3", "a1 a2 a2^-1 a1^-1 a1 a3 a3^-1", "a1 a1^-1 a1 a1^-1 a1"] {
            let word = w(s);
            let mut results = std::collections::HashSet::new();
            all_deletion_results(word.letters(), &mut results);
            assert_eq!(results.len(), 1, "{s}");
            assert_eq!(results.into_iter().next().unwrap(), word.reduce().letters().to_vec());
        }
    }

    #[test]
    fn verify_cancellation_examples() {
        assert_eq!(Cancellation::parse("1-2,3-4").unwrap().verify(&w("a1 a1^-1 a2 a2^-1")), Ok(()));
        assert_eq!(
            Cancellation::parse("1-3, 2-4").unwrap().verify(&w("a1 a2 a1^-1 a2^-1")),
            Err(Error::InvalidCancellation(CancellationViolation::Noncrossing {
                t: 1,
                partner: 3,
                witness: 2,
                witness_partner: 4
            }))
        );
        assert_eq!(
            Cancellation::parse("1-2").unwrap().verify(&w("a1 a1")),
            Err(Error::InvalidCancellation(CancellationViolation::InversePairing { t: 1, partner: 2 }))
        );
        // nested pairs with an unpaired hole
        assert_eq!(
            Cancellation::parse("1-3").unwrap().verify(&w("a1 a2 a1^-1")),
            Err(Error::InvalidCancellation(CancellationViolation::Complete { t: 1, partner: 3, gap: 2 }))
        );
        assert_eq!(
            Cancellation::parse("1-5").unwrap().verify(&w("a1 a2")),
            Err(Error::PositionOutOfRange { pos: 5, len: 2 })
        );
        assert!(matches!(
            Cancellation::parse("1-2,2-3").unwrap().verify(&w("a1 a1^-1 a1")),
            Err(Error::MalformedCancellation(_))
        ));
        assert!(Cancellation::parse("1-x").is_err());
    }

    #[test]
    fn apply_cancellation_examples() {
        let c = Cancellation::parse("1-2").unwrap();
        assert!(c.apply(&w("a1 a1^-1")).unwrap().is_identity());
        let v = w("a1 a3 a2^-1");
        assert_eq!(Cancellation::empty().apply(&v).unwrap(), v);
        assert_eq!(Cancellation::parse("2-3").unwrap().apply(&w("a1 a2 a2^-1 a3")).unwrap(), w("a1 a3"));
        // nested
        assert_eq!(
            Cancellation::parse("2-5,3-4").unwrap().apply(&w("a1 a2 a3 a3^-1 a2^-1 a4")).unwrap(),
            w("a1 a4")
        );
        assert!(Cancellation::parse("1-2").unwrap().apply(&w("a1 a1")).is_err());
    }

    #[test]
    fn multiply_and_inverse_examples() {
        assert_eq!(w("a1 a2").multiply(&w("a2^-1 a1")), w("a1 a1"));
        let x = w("a3 a1^-1 a2");
        assert_eq!(x.multiply(&Word::identity()), x);
        assert!(x.multiply(&x.inverse()).is_identity());
        assert_eq!(w("a1 a2^-1").inverse(), w("a2 a1^-1"));
    }

    #[test]
    fn length_examples() {
        assert_eq!(Word::identity().length(), z(&[]));
        assert_eq!(w("a1 a2 a1^-1").length(), z(&[2, 1]));
        assert_eq!(w("a1 a1^-1 a3").length(), z(&[0, 0, 1]));
    }

    #[test]
    fn dist_examples() {
        let x = w("a2 a1");
        assert!(word_dist(&x, &x).is_zero());
        assert_eq!(word_dist(&Word::identity(), &w("a1")), z(&[1]));
        assert_eq!(word_dist(&w("a1 a2"), &w("a1 a3")), z(&[0, 1, 1]));
    }

    #[test]
    fn gromov_examples() {
        assert_eq!(gromov(&w("a1 a2"), &w("a1 a3")), z(&[1]));
        let g = w("a4 a1^-1 a2");
        assert_eq!(gromov(&g, &g), g.length());
        assert_eq!(gromov(&w("a1"), &w("a1^-1")), z(&[]));
    }

    #[test]
    fn common_prefix_examples() {
        assert_eq!(common_prefix(&w("a1 a2"), &w("a1 a3")).unwrap(), w("a1"));
        let g = w("a2 a1 a3");
        assert_eq!(common_prefix(&g, &g).unwrap(), g);
        assert!(common_prefix(&w("a1"), &w("a2")).unwrap().is_identity());
        assert!(matches!(common_prefix(&w("a1 a1^-1"), &w("a1")), Err(Error::Unreduced(_))));
    }

    #[test]
    fn subword_examples() {
        let x = w("a1 a2");
        assert!(Word::identity().is_subword_of(&x).unwrap());
        assert!(w("a1").is_subword_of(&x).unwrap());
        assert!(!w("a2").is_subword_of(&x).unwrap());
        assert!(w("a2").is_subword_of(&w("a1 a1^-1")).is_err());

        assert_eq!(Word::identity().subwords().unwrap(), vec![Word::identity()]);
        assert_eq!(w("a2 a1").subwords().unwrap(), vec![Word::identity(), w("a2"), w("a2 a1")]);
        assert_eq!(w("a1 a1").subwords().unwrap(), vec![Word::identity(), w("a1"), w("a1 a1")]);
    }

    #[test]
    fn truncation_examples() {
        assert_eq!(WordStream::harmonic().truncate(3), w("a1 a2 a3"));
        assert_eq!(WordStream::harmonic_reversed().truncate(3), w("a3 a2 a1"));
        assert!(WordStream::harmonic().truncate(0).is_identity());
        assert!(WordStream::harmonic_reversed().truncate(0).is_identity());
        assert!(WordStream::harmonic().multiplicity_holds_to(200));
        let bad = WordStream::new(|_| Letter::gen(1), Orientation::Forward, 1);
        assert!(!bad.multiplicity_holds_to(2));
    }

    #[test]
    fn harmonic_truncations_are_cauchy() {
        let s = WordStream::harmonic();
        for j in 0..20u64 {
            for k in 0..20u64 {
                let d = word_dist(&s.truncate(j), &s.truncate(k));
                let m = j.min(k) as u32;
                assert!(d.support().all(|i| i > AlphabetIndex::Rank(m)), "{j} {k} {d}");
            }
        }
    }
}
