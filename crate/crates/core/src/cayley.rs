//! The big Cayley graph `Γ(BF(o))` with its `R^o` metric, realised over
//! exact rationals.
//!
//! A point is a vertex `w` or a triple `(w, a^p, t)` with `0 < t < 1`,
//! lying on the unit-parameter edge from `w` to `w a^p`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ordered_abelian::{Alphabet, AlphabetIndex, QVector, Rational, ZVector};
use crate::words::{gromov, Letter, Sign, Word};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum CayleyPoint {
    Vertex(Word),
    Edge { w: Word, letter: Letter, t: Rational },
}

impl CayleyPoint {
    /// `t = 0` gives the vertex `w` and `t = 1` the vertex `w a^p`.
    pub fn new(w: Word, letter: Letter, t: Rational) -> Result<Self> {
        w.require_reduced()?;
        if w.ends_with(letter.inverse()) {
            return Err(Error::NonCanonical(format!("{w} ends in {}", letter.inverse())));
        }
        if t < Rational::zero() || t > Rational::one() {
            return Err(Error::NonCanonical(format!("edge parameter {t} is outside [0, 1]")));
        }
        if t.is_zero() {
            return Ok(CayleyPoint::Vertex(w));
        }
        if t.is_one() {
            return Ok(CayleyPoint::Vertex(w.times(letter)));
        }
        Ok(CayleyPoint::Edge { w, letter, t })
    }

    pub fn vertex(w: &Word) -> Self {
        CayleyPoint::Vertex(w.reduce())
    }

    /// Distance from `ι` along the big interval, and the word naming that
    /// interval.
    fn position(&self) -> (QVector, Word) {
        match self {
            CayleyPoint::Vertex(v) => (v.length().to_rational(), v.clone()),
            CayleyPoint::Edge { w, letter, t } => {
                let n = &w.length().to_rational() + &ZVector::unit(letter.index).to_rational().scale(*t);
                (n, w.times(*letter))
            }
        }
    }

    /// Parses a bare word or `(<word> ; a<k>^<±1> ; p/q)`.
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        let t = text.trim();
        let Some(inner) = t.strip_prefix('(') else {
            return Ok(CayleyPoint::Vertex(Word::parse(t, alphabet)?.reduce()));
        };
        let syntax = |msg: &str| Error::Syntax { pos: 1, msg: msg.into() };
        let inner = inner.strip_suffix(')').ok_or_else(|| syntax("missing `)`"))?;
        let parts: Vec<&str> = inner.split(';').collect();
        if parts.len() != 3 {
            return Err(syntax("expected `(<word> ; a<k>^<±1> ; p/q)`"));
        }
        let w = Word::parse(parts[0], alphabet)?;
        let letter = match Word::parse(parts[1].trim(), alphabet)?.letters() {
            [l] => *l,
            _ => return Err(syntax("expected a single letter")),
        };
        let t: Rational = parts[2].trim().parse().map_err(|_| syntax("bad rational parameter"))?;
        CayleyPoint::new(w, letter, t)
    }
}

impl fmt::Display for CayleyPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CayleyPoint::Vertex(v) => write!(f, "{v}"),
            CayleyPoint::Edge { w, letter, t } => {
                let sign = if letter.sign == Sign::Pos { "^1" } else { "^-1" };
                write!(f, "({w} ; {}{sign} ; {t})", letter.index)
            }
        }
    }
}

impl fmt::Debug for CayleyPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `L(w) + tL(a) + L(v) + sL(b) - 2 min{L(w) + tL(a), L(v) + sL(b), c(wa, vb)}`.
pub fn cayley_dist(x: &CayleyPoint, y: &CayleyPoint) -> QVector {
    let (n, g) = x.position();
    let (m, h) = y.position();
    let c = gromov(&g, &h).to_rational();
    let least = n.lex_min(&m).lex_min(&c).clone();
    &(&n + &m) - &least.scale(Rational::from_integer(2))
}

/// `u·(w, a^p, t) = (uw, a^p, t)`, or `(uw a^p, a^-p, 1 - t)` when `uw` ends
/// in `a^-p`.
pub fn cayley_act(u: &Word, x: &CayleyPoint) -> CayleyPoint {
    match x {
        CayleyPoint::Vertex(v) => CayleyPoint::Vertex(u.multiply(v)),
        CayleyPoint::Edge { w, letter, t } => {
            let uw = u.multiply(w);
            if uw.ends_with(letter.inverse()) {
                CayleyPoint::Edge { w: uw.times(*letter), letter: letter.inverse(), t: Rational::one() - t }
            } else {
                CayleyPoint::Edge { w: uw, letter: *letter, t: *t }
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShortcutGuard {
    /// `c(wa, vb) <= L(w)` and `c(wa, vb) <= L(v)`; shortcut
    /// `L(a^-1 w^-1 v b) - (1 - t)L(a) - (1 - s)L(b)`.
    BranchBelowBoth,
    /// `L(w) + tL(a) <= c(wa, vb)`; shortcut `L(v) + sL(b) - L(w) - tL(a)`.
    FirstOnSecondInterval,
    /// `L(v) + sL(b) <= c(wa, vb)`; shortcut `L(w) + tL(a) - L(v) - sL(b)`.
    SecondOnFirstInterval,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortcutCheck {
    pub guard: ShortcutGuard,
    pub shortcut: QVector,
    pub exact: QVector,
}

impl ShortcutCheck {
    pub fn agrees(&self) -> bool {
        self.shortcut == self.exact
    }
}

/// Evaluates each closed-form shortcut whose guard holds for the two edge
/// points, next to the exact distance. Vertices carry no edge data and get
/// no checks.
pub fn shortcut_checks(x: &CayleyPoint, y: &CayleyPoint) -> Vec<ShortcutCheck> {
    let (CayleyPoint::Edge { w, letter: a, t }, CayleyPoint::Edge { w: v, letter: b, t: s }) = (x, y) else {
        return Vec::new();
    };
    let exact = cayley_dist(x, y);
    let la = ZVector::unit(a.index).to_rational();
    let lb = ZVector::unit(b.index).to_rational();
    let wa = w.times(*a);
    let vb = v.times(*b);
    let c = gromov(&wa, &vb).to_rational();
    let lw = w.length().to_rational();
    let lv = v.length().to_rational();
    let n = &lw + &la.scale(*t);
    let m = &lv + &lb.scale(*s);

    let mut out = Vec::new();
    if c <= lw && c <= lv {
        let whole = wa.inverse().multiply(&vb).length().to_rational();
        let shortcut = &(&whole - &la.scale(Rational::one() - t)) - &lb.scale(Rational::one() - s);
        out.push(ShortcutCheck { guard: ShortcutGuard::BranchBelowBoth, shortcut, exact: exact.clone() });
    }
    if n <= c {
        out.push(ShortcutCheck {
            guard: ShortcutGuard::FirstOnSecondInterval,
            shortcut: &m - &n,
            exact: exact.clone(),
        });
    }
    if m <= c {
        out.push(ShortcutCheck { guard: ShortcutGuard::SecondOnFirstInterval, shortcut: &n - &m, exact });
    }
    out
}

/// Where the unit-parameter edge `w → w a` and the `Z^o` edge meet inside
/// `[0, L(wa)]_{Q^o}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbedReport {
    /// `(t, s)` with `L(w) + t L(a) = L(w) + s`.
    pub coincidences: Vec<(Rational, ZVector)>,
    pub t_samples: usize,
    pub s_samples: usize,
}

impl EmbedReport {
    /// Only `t = 0 ↔ s = 0` and `t = 1 ↔ s = L(a)`.
    pub fn only_endpoints(&self, a: AlphabetIndex) -> bool {
        let expected = [(Rational::zero(), ZVector::zero()), (Rational::one(), ZVector::unit(a))];
        self.coincidences.len() == 2 && expected.iter().all(|e| self.coincidences.contains(e))
    }
}

/// `0, 1/k, ..., 1`.
pub fn unit_grid(k: i64) -> Vec<Rational> {
    (0..=k).map(|i| Rational::new(i, k)).collect()
}

/// A spread of `Z^o` offsets in `[0, L(a)]`: both endpoints, small vectors
/// supported after `a`, and vectors just below `L(a)`.
pub fn offset_grid(a: AlphabetIndex) -> Vec<ZVector> {
    let mut out = vec![ZVector::zero(), ZVector::unit(a)];
    if let AlphabetIndex::Rank(r) = a {
        for j in r + 1..=r + 3 {
            let ej = ZVector::unit(AlphabetIndex::Rank(j));
            for c in 1..=5 {
                out.push(ej.scale(c));
                out.push(&ZVector::unit(a) - &ej.scale(c));
                let next = ZVector::unit(AlphabetIndex::Rank(j + 1));
                out.push(&ej.scale(c) - &next.scale(c));
                out.push(&ZVector::unit(a) - &(&ej.scale(c) - &next));
            }
        }
    }
    let top = ZVector::unit(a);
    out.retain(|s| !s.is_negative() && *s <= top);
    out.sort();
    out.dedup();
    out
}

pub fn embed_compare(w: &Word, a: AlphabetIndex, t_grid: &[Rational], s_grid: &[ZVector]) -> EmbedReport {
    let base = w.reduce().length().to_rational();
    let la = ZVector::unit(a).to_rational();
    let s_grid: Vec<&ZVector> = s_grid
        .iter()
        .filter(|s| !s.is_negative() && **s <= ZVector::unit(a))
        .collect();
    let mut coincidences = Vec::new();
    for &t in t_grid {
        let on_cayley_edge = &base + &la.scale(t);
        for s in &s_grid {
            let on_tree_edge = &base + &s.to_rational();
            if on_cayley_edge == on_tree_edge {
                coincidences.push((t, (*s).clone()));
            }
        }
    }
    EmbedReport { coincidences, t_samples: t_grid.len(), s_samples: s_grid.len() }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BallEdge {
    pub from: Word,
    pub to: Word,
    /// The generator `a<k>` with `from · a<k> = to`.
    pub label: String,
}

/// The ball of radius `max_len` (in letters) about `center` in the ordinary
/// Cayley graph on generators `a1..a<max_letter>`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BallGraph {
    pub center: Word,
    pub vertices: Vec<Word>,
    pub edges: Vec<BallEdge>,
}

pub const DEFAULT_VERTEX_CAP: usize = 200_000;

fn ball_size(max_len: usize, max_letter: u32) -> u128 {
    let m = 2 * max_letter as u128;
    let mut total: u128 = 1;
    let mut layer: u128 = 1;
    for i in 0..max_len {
        layer = layer.saturating_mul(if i == 0 { m } else { m.saturating_sub(1) });
        total = total.saturating_add(layer);
    }
    total
}

fn vertex_key(w: &Word) -> (usize, Vec<Letter>) {
    (w.len(), w.letters().to_vec())
}

pub fn ball_graph(center: &Word, max_len: usize, max_letter: u32, cap: usize) -> Result<BallGraph> {
    let needed = ball_size(max_len, max_letter);
    if needed > cap as u128 {
        return Err(Error::ResourceGuard { needed, cap });
    }
    let center = center.reduce();
    let letters: Vec<Letter> = (1..=max_letter).flat_map(|r| [Letter::gen(r), Letter::gen_inv(r)]).collect();

    let mut vertices = vec![center.clone()];
    let mut edges = Vec::new();
    let mut queue: VecDeque<Word> = VecDeque::from([Word::identity()]);
    while let Some(u) = queue.pop_front() {
        if u.len() == max_len {
            continue;
        }
        for &l in &letters {
            if u.last().is_some_and(|p| p.cancels(l)) {
                continue;
            }
            let child = u.times(l);
            let (parent_v, child_v) = (center.multiply(&u), center.multiply(&child));
            let (from, to) = match l.sign {
                Sign::Pos => (parent_v, child_v.clone()),
                Sign::Neg => (child_v.clone(), parent_v),
            };
            edges.push(BallEdge { from, to, label: l.index.to_string() });
            vertices.push(child_v);
            queue.push_back(child);
        }
    }
    vertices.sort_by_key(vertex_key);
    edges.sort_by_key(|e| (vertex_key(&e.from), vertex_key(&e.to)));
    Ok(BallGraph { center, vertices, edges })
}

impl BallGraph {
    /// Connected with `|E| = |V| - 1`.
    pub fn is_tree(&self) -> bool {
        if self.edges.len() + 1 != self.vertices.len() {
            return false;
        }
        let index: BTreeMap<(usize, Vec<Letter>), usize> =
            self.vertices.iter().enumerate().map(|(i, v)| (vertex_key(v), i)).collect();
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            let (Some(&a), Some(&b)) = (index.get(&vertex_key(&e.from)), index.get(&vertex_key(&e.to))) else {
                return false;
            };
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for &j in &adj[i] {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph ball {\n");
        for v in &self.vertices {
            if *v == self.center {
                out.push_str(&format!("  \"{v}\" [shape=doublecircle];\n"));
            } else {
                out.push_str(&format!("  \"{v}\";\n"));
            }
        }
        for e in &self.edges {
            out.push_str(&format!("  \"{}\" -> \"{}\" [label=\"{}\"];\n", e.from, e.to, e.label));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("ball graphs serialize")
    }
}
