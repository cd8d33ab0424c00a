//! Combinatorial coordinates for `T(BF(ω))`.
//!
//! Every point of the tree lies on a unique edge `[w, w a^p]`, so it can be
//! written as a word `w` (an edge endpoint) or as a triple `(w, a^p, t)`
//! with `0 < t < L(a)` and `w` not ending in `a^-p`. The quotient of the
//! tree by the group is a wedge of `Z^ω`-circles `C_a` of circumference
//! `L(a)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::ordered_abelian::{Alphabet, AlphabetIndex, ZVector};
use crate::tree::{tree_dist, TreePoint};
use crate::words::{word_dist, Letter, Sign, Word};

/// An interior point of the edge `[w, w·letter]` at offset `t` from `w`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeTriple {
    w: Word,
    letter: Letter,
    t: ZVector,
}

/// A tree point in combinatorial form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum TreeLocation {
    Vertex(Word),
    Edge(EdgeTriple),
}

fn letter_length(letter: Letter) -> ZVector {
    ZVector::unit(letter.index)
}

impl EdgeTriple {
    /// Validates canonicality. `t = 0` collapses to the vertex `w`.
    #[allow(clippy::new_ret_no_self)]
    pub fn new(w: Word, letter: Letter, t: ZVector) -> Result<TreeLocation> {
        w.require_reduced()?;
        if w.ends_with(letter.inverse()) {
            return Err(Error::NonCanonical(format!("{w} ends in {}", letter.inverse())));
        }
        if t.is_negative() || t >= letter_length(letter) {
            return Err(Error::NonCanonical(format!(
                "offset {t} is outside [0, L({})) = [0, {})",
                letter.index,
                letter_length(letter)
            )));
        }
        if t.is_zero() {
            return Ok(TreeLocation::Vertex(w));
        }
        Ok(TreeLocation::Edge(EdgeTriple { w, letter, t }))
    }

    pub fn w(&self) -> &Word {
        &self.w
    }

    pub fn letter(&self) -> Letter {
        self.letter
    }

    pub fn t(&self) -> &ZVector {
        &self.t
    }

    /// The far endpoint `w a^p`.
    pub fn head(&self) -> Word {
        self.w.times(self.letter)
    }
}

impl TreeLocation {
    pub fn vertex(w: &Word) -> Self {
        TreeLocation::Vertex(w.reduce())
    }

    /// Base word and offset; vertices have offset 0.
    fn base_and_offset(&self) -> (&Word, ZVector) {
        match self {
            TreeLocation::Vertex(v) => (v, ZVector::zero()),
            TreeLocation::Edge(e) => (&e.w, e.t.clone()),
        }
    }

    /// Parses a bare word, or `(<word> ; a<k>^<±1> ; <t-vector>)`.
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        let t = text.trim();
        let Some(inner) = t.strip_prefix('(') else {
            return Ok(TreeLocation::Vertex(Word::parse(t, alphabet)?.reduce()));
        };
        let inner = inner.strip_suffix(')').ok_or_else(|| Error::Syntax {
            pos: text.len(),
            msg: "missing `)`".into(),
        })?;
        let parts: Vec<&str> = inner.split(';').collect();
        if parts.len() != 3 {
            return Err(Error::Syntax {
                pos: 1,
                msg: "expected `(<word> ; a<k>^<±1> ; <t-vector>)`".into(),
            });
        }
        let w = Word::parse(parts[0], alphabet)?;
        let letter = parse_signed_letter(parts[1].trim(), alphabet)?;
        let offset: ZVector = parts[2].parse()?;
        alphabet.check(&offset)?;
        EdgeTriple::new(w, letter, offset)
    }
}

fn parse_signed_letter(token: &str, alphabet: Alphabet) -> Result<Letter> {
    let word = Word::parse(&token.replace("^+1", "^1"), alphabet)?;
    match word.letters() {
        [l] => Ok(*l),
        _ => Err(Error::Syntax {
            pos: 1,
            msg: format!("expected a single letter a<k>^<±1>, found `{token}`"),
        }),
    }
}

impl fmt::Display for TreeLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeLocation::Vertex(v) => write!(f, "{v}"),
            TreeLocation::Edge(e) => {
                let sign = if e.letter.sign == Sign::Pos { "^1" } else { "^-1" };
                write!(f, "({} ; {}{} ; {})", e.w, e.letter.index, sign, e.t)
            }
        }
    }
}

impl fmt::Debug for TreeLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Index `j` of the first prefix `g[..j]` with `L(g[..j]) >= n`.
///
/// Works in rounds. A round starts from a prefix `s` known to be shorter
/// than `n` and an end `e` known to reach it, takes the threshold `a` to be
/// the first coordinate where `L(g[..s])` falls short of `n`, and scans the
/// occurrences in `(s, e]` of letters with index `<= a`, in word order. Only
/// those letters can change coordinates `<= a`. The letters strictly between
/// two such occurrences have larger index, so they can only push a prefix
/// past `n` when the preceding occurrence already matches `n` on every
/// coordinate `<= a`; in that case the gap is rescanned with a larger
/// threshold.
fn first_subword_reaching(prefix_lengths: &[ZVector], letters: &[Letter], n: &ZVector) -> usize {
    if n.is_zero() {
        return 0;
    }
    let first_shortfall = |k: usize| (n - &prefix_lengths[k]).leading_index().expect("prefix is shorter than n");
    let (mut s, mut e) = (0, letters.len());
    loop {
        if e == s + 1 {
            return e;
        }
        let threshold = first_shortfall(s);
        let mut prev = s;
        let mut reached = None;
        for j in (s + 1..=e).filter(|&j| letters[j - 1].index <= threshold) {
            if prefix_lengths[j] >= *n {
                reached = Some(j);
                break;
            }
            prev = j;
        }
        match reached {
            Some(j) => {
                if prev + 1 == j || first_shortfall(prev) <= threshold {
                    return j;
                }
                s = prev;
                e = j;
            }
            None => {
                assert!(prev > s, "a prefix reaching n must use a letter of index <= {threshold}");
                s = prev;
            }
        }
    }
}

/// Canonical combinatorial form of a tree point.
pub fn to_triple(p: &TreePoint) -> TreeLocation {
    let g = p.g();
    let letters = g.letters();
    let mut prefix_lengths = Vec::with_capacity(letters.len() + 1);
    let mut acc = ZVector::zero();
    prefix_lengths.push(acc.clone());
    for l in letters {
        acc.add_at(l.index, 1);
        prefix_lengths.push(acc.clone());
    }
    let j = first_subword_reaching(&prefix_lengths, letters, p.n());
    if prefix_lengths[j] == *p.n() {
        return TreeLocation::Vertex(g.prefix(j));
    }
    TreeLocation::Edge(EdgeTriple {
        w: g.prefix(j - 1),
        letter: letters[j - 1],
        t: p.n() - &prefix_lengths[j - 1],
    })
}

/// The point `⟨L(b), a_k ⋯ a_2 a_1⟩` of the `ω+1` tree, where `b` is the
/// top letter. Its canonical edge letter is `a_k`, so it moves with `k`.
pub fn top_truncation_point(k: u32) -> TreePoint {
    let g = Word::from_letters((1..=k).rev().map(Letter::gen).collect());
    TreePoint::new(ZVector::unit(AlphabetIndex::Top), g).expect("L(b) lies below every nonempty finite word")
}

/// `v ↦ ⟨L(v), v⟩`, `(w, a^p, t) ↦ ⟨L(w) + t, w a^p⟩`.
pub fn from_triple(loc: &TreeLocation) -> TreePoint {
    match loc {
        TreeLocation::Vertex(v) => TreePoint::vertex(v),
        TreeLocation::Edge(e) => TreePoint::new(&e.w.length() + &e.t, e.head())
            .expect("canonical triples give valid tree points"),
    }
}

/// `u·(w, a^p, t) = (uw, a^p, t)`, unless `uw` ends in `a^-p`, in which case
/// it is `(uw a^p, a^-p, L(a) - t)`.
pub fn act_triple(u: &Word, loc: &TreeLocation) -> TreeLocation {
    match loc {
        TreeLocation::Vertex(v) => TreeLocation::Vertex(u.multiply(v)),
        TreeLocation::Edge(e) => {
            let uw = u.multiply(&e.w);
            if uw.ends_with(e.letter.inverse()) {
                TreeLocation::Edge(EdgeTriple {
                    w: uw.times(e.letter),
                    letter: e.letter.inverse(),
                    t: &letter_length(e.letter) - &e.t,
                })
            } else {
                TreeLocation::Edge(EdgeTriple { w: uw, letter: e.letter, t: e.t.clone() })
            }
        }
    }
}

/// How two tree locations sit relative to each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeRelation {
    /// Same base word and same letter.
    SameEdge,
    /// Same base word, different letters.
    Sibling,
    /// One edge lies on the geodesic from its base to the other point's base.
    Nested,
    /// Anything else.
    Apart,
}

pub fn edge_relation(x: &TreeLocation, y: &TreeLocation) -> EdgeRelation {
    let lies_toward = |e: &EdgeTriple, other: &Word| e.head().is_subword_of(other).expect("reduced");
    match (x, y) {
        (TreeLocation::Edge(a), TreeLocation::Edge(b)) if a.w == b.w => {
            if a.letter == b.letter {
                EdgeRelation::SameEdge
            } else {
                EdgeRelation::Sibling
            }
        }
        _ => {
            let (xw, _) = x.base_and_offset();
            let (yw, _) = y.base_and_offset();
            let nested_x = matches!(x, TreeLocation::Edge(a) if lies_toward(a, yw));
            let nested_y = matches!(y, TreeLocation::Edge(b) if lies_toward(b, xw));
            if nested_x || nested_y {
                EdgeRelation::Nested
            } else {
                EdgeRelation::Apart
            }
        }
    }
}

/// Exact distance between two locations, alongside the shortcut
/// `L(w^-1 v) + t + s` (or `|t - s|` on a common edge) for comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleDistance {
    pub exact: ZVector,
    pub shortcut: ZVector,
    pub relation: EdgeRelation,
}

impl TripleDistance {
    pub fn shortcut_agrees(&self) -> bool {
        self.exact == self.shortcut
    }
}

pub fn triple_dist(x: &TreeLocation, y: &TreeLocation) -> TripleDistance {
    let exact = tree_dist(&from_triple(x), &from_triple(y));
    let relation = edge_relation(x, y);
    let (w, t) = x.base_and_offset();
    let (v, s) = y.base_and_offset();
    let shortcut = if relation == EdgeRelation::SameEdge {
        (&t - &s).abs()
    } else {
        &(&word_dist(w, v) + &t) + &s
    };
    TripleDistance { exact, shortcut, relation }
}

/// A point of the circle `C_a = [0, L(a)]/(0 ~ L(a))`. Offsets are kept in
/// `[0, L(a))`; every offset-zero point is the wedge point, stored on `C_{a1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CirclePoint {
    circle: AlphabetIndex,
    s: ZVector,
}

impl CirclePoint {
    pub fn new(circle: AlphabetIndex, s: ZVector) -> Result<Self> {
        let circumference = ZVector::unit(circle);
        // L(a) itself is the identification point
        let s = if s == circumference { ZVector::zero() } else { s };
        if s.is_negative() || s > circumference {
            return Err(Error::InvalidPoint(format!("{s} is outside [0, {circumference}]")));
        }
        if s.is_zero() {
            return Ok(CirclePoint::wedge_point());
        }
        Ok(CirclePoint { circle, s })
    }

    pub fn wedge_point() -> Self {
        CirclePoint { circle: AlphabetIndex::Rank(1), s: ZVector::zero() }
    }

    pub fn is_wedge_point(&self) -> bool {
        self.s.is_zero()
    }

    pub fn circle(&self) -> AlphabetIndex {
        self.circle
    }

    pub fn s(&self) -> &ZVector {
        &self.s
    }

    fn circumference(&self) -> ZVector {
        ZVector::unit(self.circle)
    }

    fn to_wedge_point(&self) -> ZVector {
        let back = &self.circumference() - &self.s;
        self.s.lex_min(&back).clone()
    }

    /// Parses `C(a<k>) @ <s-vector>`.
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        let syntax = |msg: &str| Error::Syntax { pos: 1, msg: msg.into() };
        let (head, s) = text.split_once('@').ok_or_else(|| syntax("expected `C(a<k>) @ <vector>`"))?;
        let name = head
            .trim()
            .strip_prefix("C(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| syntax("expected `C(a<k>)`"))?;
        let letter = parse_signed_letter(name, alphabet)?;
        let s: ZVector = s.parse()?;
        alphabet.check(&s)?;
        CirclePoint::new(letter.index, s)
    }
}

impl fmt::Display for CirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({}) @ {}", self.circle, self.s)
    }
}

impl fmt::Debug for CirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Image in the wedge of circles: `t ∈ C_a` for `p = 1`, `L(a) - t` for
/// `p = -1`. Vertices go to the wedge point.
pub fn project(loc: &TreeLocation) -> CirclePoint {
    match loc {
        TreeLocation::Vertex(_) => CirclePoint::wedge_point(),
        TreeLocation::Edge(e) => {
            let s = match e.letter.sign {
                Sign::Pos => e.t.clone(),
                Sign::Neg => &letter_length(e.letter) - &e.t,
            };
            CirclePoint::new(e.letter.index, s).expect("edge offsets are in range")
        }
    }
}

/// An element carrying `x` to `y` when both have the same projection.
pub fn orbit_witness(x: &TreeLocation, y: &TreeLocation) -> Option<Word> {
    if project(x) != project(y) {
        return None;
    }
    match (x, y) {
        (TreeLocation::Vertex(w), TreeLocation::Vertex(v)) => Some(v.multiply(&w.inverse())),
        (TreeLocation::Edge(a), TreeLocation::Edge(b)) => {
            if a.letter == b.letter {
                Some(b.w.multiply(&a.w.inverse()))
            } else {
                // b = (v, a^-p, L(a) - t) is reached through u = v a^-p w^-1
                Some(b.w.times(b.letter).multiply(&a.w.inverse()))
            }
        }
        _ => None,
    }
}

/// `min{|s - t|, L(a) - |s - t|}` on one circle; through the wedge point
/// otherwise.
pub fn circle_dist(x: &CirclePoint, y: &CirclePoint) -> ZVector {
    if x.is_wedge_point() || y.is_wedge_point() || x.circle != y.circle {
        return &x.to_wedge_point() + &y.to_wedge_point();
    }
    let d = (&x.s - &y.s).abs();
    let wrap = &x.circumference() - &d;
    d.lex_min(&wrap).clone()
}

/// The quotient distance read off edge representatives at `ι`: `|t - s|` on
/// a shared edge, `t + s` otherwise, minimised over the two representatives
/// `(ι, a, s)` and `(ι, a^-1, L(a) - s)` of each orbit.
pub fn quotient_dist_via_representatives(x: &CirclePoint, y: &CirclePoint) -> ZVector {
    let reps = |c: &CirclePoint| -> Vec<(Option<Letter>, ZVector)> {
        if c.is_wedge_point() {
            return vec![(None, ZVector::zero())];
        }
        vec![
            (Some(Letter::new(c.circle, Sign::Pos)), c.s.clone()),
            (Some(Letter::new(c.circle, Sign::Neg)), &c.circumference() - &c.s),
        ]
    };
    let mut best: Option<ZVector> = None;
    for (la, t) in reps(x) {
        for (lb, s) in reps(y) {
            let d = if la.is_some() && la == lb { (&t - &s).abs() } else { &t + &s };
            if best.as_ref().is_none_or(|b| d < *b) {
                best = Some(d);
            }
        }
    }
    best.expect("at least one representative each")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{point_eq, tree_act};

    fn w(s: &str) -> Word {
        Word::parse(s, Alphabet::Omega).unwrap()
    }

    fn z(c: &[i64]) -> ZVector {
        ZVector::from_coords(c)
    }

    fn edge(base: &str, letter: Letter, t: &[i64]) -> TreeLocation {
        EdgeTriple::new(w(base), letter, z(t)).unwrap()
    }

    fn pt(n: &[i64], g: &str) -> TreePoint {
        TreePoint::new(z(n), w(g)).unwrap()
    }

    /// Oracle: scan every prefix in order.
    fn first_subword_linear(g: &Word, n: &ZVector) -> usize {
        (0..=g.len()).find(|&k| g.prefix(k).length() >= *n).unwrap()
    }

    #[test]
    fn to_triple_examples() {
        assert_eq!(to_triple(&pt(&[], "a1 a2")), TreeLocation::Vertex(Word::identity()));
        assert_eq!(to_triple(&pt(&[1, 1], "a1 a2 a3")), TreeLocation::Vertex(w("a1 a2")));
        assert_eq!(to_triple(&pt(&[1], "a2 a1")), edge("a2", Letter::gen(1), &[1, -1]));
    }

    #[test]
    fn threshold_scan_handles_late_crossings() {
        // n = [1,0,1]: a1 reaches coordinate 1, then a3 crosses n before the
        // next index-1 occurrence
        let g = w("a1 a3 a3 a1");
        let p = pt(&[1, 0, 1], "a1 a3 a3 a1");
        assert_eq!(first_subword_linear(&g, p.n()), 2);
        assert_eq!(to_triple(&p), TreeLocation::Vertex(w("a1 a3")));
        let p = pt(&[1, 0, 1, -1], "a1 a3 a3 a1");
        assert_eq!(to_triple(&p), edge("a1", Letter::gen(3), &[0, 0, 1, -1]));
    }

    #[test]
    fn threshold_scan_matches_linear_scan_exhaustively() {
        let words = crate::sample::reduced_words(4, 3);
        let offsets: Vec<ZVector> = [
            &[][..], &[1], &[0, 1], &[0, 0, 1], &[1, -1], &[1, 0, -1], &[1, 1], &[0, 1, -1],
            &[2, -1], &[1, 1, 1], &[1, 0, 1], &[0, 2, -2], &[2, 0, 1], &[1, -1, 2], &[0, 1, 1],
        ]
        .iter()
        .map(|c| z(c))
        .collect();
        let mut checked = 0;
        for g in &words {
            for n in &offsets {
                if n > &g.length() {
                    continue;
                }
                let p = TreePoint::new(n.clone(), g.clone()).unwrap();
                let j = first_subword_linear(g, n);
                let expected = if g.prefix(j).length() == *n {
                    TreeLocation::Vertex(g.prefix(j))
                } else {
                    TreeLocation::Edge(EdgeTriple {
                        w: g.prefix(j - 1),
                        letter: g.letters()[j - 1],
                        t: n - &g.prefix(j - 1).length(),
                    })
                };
                assert_eq!(to_triple(&p), expected, "{p:?}");
                checked += 1;
            }
        }
        assert!(checked > 5000);
    }

    #[test]
    fn from_triple_examples() {
        assert_eq!(from_triple(&TreeLocation::Vertex(Word::identity())), TreePoint::basepoint());
        assert_eq!(from_triple(&edge("a2", Letter::gen(1), &[1, -1])), pt(&[1], "a2 a1"));
        assert!(matches!(
            EdgeTriple::new(Word::identity(), Letter::gen(1), z(&[1])),
            Err(Error::NonCanonical(_))
        ));
        assert!(matches!(
            EdgeTriple::new(w("a1"), Letter::gen_inv(1), z(&[0, 1])),
            Err(Error::NonCanonical(_))
        ));
        assert_eq!(
            EdgeTriple::new(w("a1"), Letter::gen(2), z(&[])).unwrap(),
            TreeLocation::Vertex(w("a1"))
        );
    }

    #[test]
    fn act_triple_examples() {
        let e = edge("a3", Letter::gen(1), &[0, 2]);
        assert_eq!(act_triple(&Word::identity(), &e), e);
        let t = z(&[1, -2, 5]);
        let at_root = EdgeTriple::new(Word::identity(), Letter::gen(1), t.clone()).unwrap();
        assert_eq!(act_triple(&w("a2"), &at_root), EdgeTriple::new(w("a2"), Letter::gen(1), t.clone()).unwrap());
        let inv = EdgeTriple::new(Word::identity(), Letter::gen_inv(1), t.clone()).unwrap();
        assert_eq!(
            act_triple(&w("a1"), &inv),
            EdgeTriple::new(Word::identity(), Letter::gen(1), &z(&[1]) - &t).unwrap()
        );
    }

    #[test]
    fn act_triple_is_equivariant_on_small_cases() {
        let locs = [
            edge("", Letter::gen(1), &[0, 1]),
            edge("a2", Letter::gen_inv(1), &[1, -3]),
            edge("a1 a2", Letter::gen(3), &[0, 0, 0, 4]),
            TreeLocation::vertex(&w("a2^-1 a1")),
        ];
        for u in crate::sample::reduced_words(2, 3) {
            for loc in &locs {
                let lhs = from_triple(&act_triple(&u, loc));
                let rhs = tree_act(&u, &from_triple(loc));
                assert!(point_eq(&lhs, &rhs), "{u} . {loc}");
                assert_eq!(to_triple(&rhs), act_triple(&u, loc));
            }
        }
    }

    #[test]
    fn triple_dist_examples() {
        let (t, s) = (z(&[0, 3]), z(&[1, -1]));
        let d = triple_dist(&edge("", Letter::gen(1), &[0, 3]), &edge("", Letter::gen(1), &[1, -1]));
        assert_eq!(d.exact, (&t - &s).abs());
        assert!(d.shortcut_agrees());
        assert_eq!(d.relation, EdgeRelation::SameEdge);

        let d = triple_dist(&edge("", Letter::gen(1), &[0, 1]), &edge("", Letter::gen(2), &[0, 0, 1]));
        assert_eq!(d.exact, z(&[0, 1, 1]));
        assert!(d.shortcut_agrees());
        assert_eq!(d.relation, EdgeRelation::Sibling);

        let d = triple_dist(&edge("", Letter::gen(1), &[0, 1]), &edge("a1", Letter::gen(2), &[0, 0, 1]));
        assert_eq!(d.exact, z(&[1, -1, 1]));
        assert_eq!(d.shortcut, z(&[1, 1, 1]));
        assert!(!d.shortcut_agrees());
        assert_eq!(d.relation, EdgeRelation::Nested);
    }

    #[test]
    fn project_examples() {
        let c1 = AlphabetIndex::Rank(1);
        assert_eq!(project(&edge("a4", Letter::gen(1), &[0, 2])), CirclePoint::new(c1, z(&[0, 2])).unwrap());
        let e = edge("", Letter::gen_inv(1), &[0, 1]);
        assert_eq!(project(&e), CirclePoint::new(c1, z(&[1, -1])).unwrap());
        let moved = act_triple(&w("a1"), &e);
        assert_eq!(project(&moved), project(&e));
        let u = orbit_witness(&e, &moved).unwrap();
        assert_eq!(act_triple(&u, &e), moved);
    }

    #[test]
    fn circle_dist_examples() {
        let c1 = AlphabetIndex::Rank(1);
        let x = CirclePoint::new(c1, z(&[0, 5])).unwrap();
        assert!(circle_dist(&x, &x).is_zero());
        let zero = CirclePoint::new(c1, z(&[])).unwrap();
        let y = CirclePoint::new(c1, z(&[0, 3])).unwrap();
        assert_eq!(circle_dist(&zero, &y), z(&[0, 3]));
        let near_end = CirclePoint::new(c1, z(&[1, -1])).unwrap();
        assert_eq!(circle_dist(&near_end, &zero), z(&[0, 1]));
        // L(a) is the identification point
        assert_eq!(CirclePoint::new(c1, z(&[1])).unwrap(), CirclePoint::wedge_point());
        assert!(CirclePoint::new(c1, z(&[1, 1])).is_err());
    }

    #[test]
    fn circle_dist_matches_representatives() {
        let pts: Vec<CirclePoint> = [
            (1, &[][..]), (1, &[0, 1]), (1, &[1, -1]), (1, &[0, 0, 3]), (2, &[0, 1, -2]),
            (2, &[0, 0, 1]), (3, &[0, 0, 1, -1]),
        ]
        .iter()
        .map(|(a, s)| CirclePoint::new(AlphabetIndex::Rank(*a), z(s)).unwrap())
        .collect();
        for x in &pts {
            for y in &pts {
                assert_eq!(circle_dist(x, y), quotient_dist_via_representatives(x, y), "{x} {y}");
            }
        }
    }

    #[test]
    fn text_forms() {
        let e = edge("a2", Letter::gen(1), &[1, -1]);
        assert_eq!(e.to_string(), "(a2 ; a1^1 ; [1,-1])");
        assert_eq!(TreeLocation::parse("(a2 ; a1^1 ; [1,-1])", Alphabet::Omega).unwrap(), e);
        assert_eq!(TreeLocation::parse("( ; a1^-1 ; [0,1])", Alphabet::Omega).unwrap().to_string(), "(ι ; a1^-1 ; [0,1])");
        assert_eq!(TreeLocation::parse("a1 a2", Alphabet::Omega).unwrap(), TreeLocation::vertex(&w("a1 a2")));
        let c = CirclePoint::parse("C(a2) @ [0,1,-1]", Alphabet::Omega).unwrap();
        assert_eq!(c.to_string(), "C(a2) @ [0,1,-1]");
        assert!(TreeLocation::parse("(a1 ; a1 a2 ; [])", Alphabet::Omega).is_err());
    }

    #[test]
    fn top_truncations_never_stabilise() {
        for k in 1..=20u32 {
            let TreeLocation::Edge(e) = to_triple(&top_truncation_point(k)) else { panic!("k={k}") };
            assert_eq!(e.letter(), Letter::gen(k));
            assert!(e.w().is_identity());
            assert_eq!(*e.t(), ZVector::unit(AlphabetIndex::Top));
        }
    }
}
