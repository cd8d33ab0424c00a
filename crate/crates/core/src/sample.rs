//! Deterministic sample generators shared by the property suites.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bf_combinatorial::{EdgeTriple, TreeLocation};
use crate::cayley::CayleyPoint;
use crate::ordered_abelian::{AlphabetIndex, Rational, ZVector};
use crate::tree::TreePoint;
use crate::words::{Cancellation, Letter, Sign, Word};

pub fn random_letter<R: Rng + ?Sized>(rng: &mut R, max_index: u32) -> Letter {
    let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
    Letter::new(AlphabetIndex::Rank(rng.gen_range(1..=max_index)), sign)
}

/// A word that is usually not reduced: each step either cancels the previous
/// letter or appends a fresh random one.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, max_len: usize, max_index: u32) -> Word {
    let len = rng.gen_range(0..=max_len);
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    for _ in 0..len {
        let next = match letters.last() {
            Some(l) if rng.gen_bool(0.4) => l.inverse(),
            _ => random_letter(rng, max_index),
        };
        letters.push(next);
    }
    Word::from_letters(letters)
}

/// A uniformly random reduced word of length at most `max_len`.
pub fn random_reduced_word<R: Rng + ?Sized>(rng: &mut R, max_len: usize, max_index: u32) -> Word {
    let len = rng.gen_range(0..=max_len);
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = random_letter(rng, max_index);
        if letters.last().is_some_and(|p| p.cancels(l)) {
            continue;
        }
        letters.push(l);
    }
    Word::from_letters(letters)
}

/// Reduced words sharing a random common stem, so Gromov products and
/// median points are nontrivial.
pub fn random_related_words<R: Rng + ?Sized>(
    rng: &mut R,
    count: usize,
    max_len: usize,
    max_index: u32,
) -> Vec<Word> {
    let stem = random_reduced_word(rng, max_len / 2, max_index);
    (0..count)
        .map(|_| {
            let cut = rng.gen_range(0..=stem.len());
            let tail = random_reduced_word(rng, max_len - max_len / 2, max_index);
            stem.prefix(cut).multiply(&tail)
        })
        .collect()
}

/// All reduced words of length at most `max_len` over ranks `1..=max_index`,
/// ordered by length and then letter sequence.
pub fn reduced_words(max_len: usize, max_index: u32) -> Vec<Word> {
    let letters: Vec<Letter> = (1..=max_index)
        .flat_map(|r| [Letter::gen(r), Letter::gen_inv(r)])
        .collect();
    let mut out = vec![Word::identity()];
    let mut frontier = vec![Vec::<Letter>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &letters {
                if w.last().is_some_and(|p| p.cancels(l)) {
                    continue;
                }
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned().map(Word::from_letters));
        frontier = next;
    }
    out
}

/// A random `t` with `0 <= t < L(a)` in `Z^o`, supported on `a` and a few
/// later ranks. `a` must be a rank.
pub fn random_edge_offset<R: Rng + ?Sized>(rng: &mut R, a: AlphabetIndex, allow_zero: bool) -> ZVector {
    let rank = a.rank().expect("edge offsets are sampled for ranked letters");
    loop {
        let mut t = ZVector::zero();
        if rng.gen_bool(0.5) {
            // [1, negative tail]: just below L(a)
            t.add_at(a, 1);
            let j = rank + rng.gen_range(1..=3);
            t.add_at(AlphabetIndex::Rank(j), -rng.gen_range(1..=4));
        }
        for _ in 0..rng.gen_range(0..=2) {
            let j = rank + rng.gen_range(1..=3);
            t.add_at(AlphabetIndex::Rank(j), rng.gen_range(-3..=3));
        }
        let in_range = t >= ZVector::zero() && t < ZVector::unit(a);
        if in_range && (allow_zero || !t.is_zero()) {
            return t;
        }
    }
}

/// A point `⟨n, g⟩` with `n` anywhere on `[0, L(g)]`, often strictly inside
/// an edge and often not at the end of `g`.
pub fn random_tree_point<R: Rng + ?Sized>(rng: &mut R, g: Word) -> TreePoint {
    let g = g.reduce();
    let k = rng.gen_range(0..=g.len());
    let mut n = g.prefix(k).length();
    if k < g.len() {
        let next = g.letters()[k].index;
        n = &n + &random_edge_offset(rng, next, true);
    }
    TreePoint::new(n, g).expect("n lies on [0, L(g)]")
}

/// A letter that may follow `w` in a canonical triple or Cayley point.
fn edge_letter<R: Rng + ?Sized>(rng: &mut R, w: &Word, max_index: u32) -> Letter {
    loop {
        let l = random_letter(rng, max_index);
        if !w.ends_with(l.inverse()) {
            return l;
        }
    }
}

/// A canonical location; about one in eight is a vertex.
pub fn random_location<R: Rng + ?Sized>(rng: &mut R, w: Word, max_index: u32) -> TreeLocation {
    let w = w.reduce();
    let l = edge_letter(rng, &w, max_index);
    let t = if rng.gen_bool(0.125) { ZVector::zero() } else { random_edge_offset(rng, l.index, false) };
    EdgeTriple::new(w, l, t).expect("canonical by construction")
}

/// A canonical Cayley point with parameter `i/d`, `d <= 12`.
pub fn random_cayley_point<R: Rng + ?Sized>(rng: &mut R, w: Word, max_index: u32) -> CayleyPoint {
    let w = w.reduce();
    let l = edge_letter(rng, &w, max_index);
    let d = rng.gen_range(1..=12);
    let t = Rational::new(rng.gen_range(0..=d), d);
    CayleyPoint::new(w, l, t).expect("canonical by construction")
}

/// All segments `[l, r]` (0-based, inclusive) that freely reduce to the
/// identity.
fn null_segments(letters: &[Letter]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for l in 0..letters.len() {
        let mut stack: Vec<Letter> = Vec::new();
        for (r, &x) in letters.iter().enumerate().skip(l) {
            if stack.last().is_some_and(|y| y.cancels(x)) {
                stack.pop();
            } else {
                stack.push(x);
            }
            if stack.is_empty() {
                out.push((l, r));
            }
        }
    }
    out
}

/// Stack matching inside a null segment, as 1-based pairs.
fn segment_pairs(letters: &[Letter], l: usize, r: usize, out: &mut Vec<(usize, usize)>) {
    let mut stack: Vec<usize> = Vec::new();
    for k in l..=r {
        match stack.last() {
            Some(&j) if letters[j].cancels(letters[k]) => {
                stack.pop();
                out.push((j + 1, k + 1));
            }
            _ => stack.push(k),
        }
    }
    debug_assert!(stack.is_empty());
}

/// A random nonempty valid cancellation of `w`, or `None` when `w` is
/// reduced. The result is a union of disjoint null segments, each paired by
/// its stack matching.
pub fn random_cancellation<R: Rng + ?Sized>(rng: &mut R, w: &Word) -> Option<Cancellation> {
    let letters = w.letters();
    let mut segments = null_segments(letters);
    if segments.is_empty() {
        return None;
    }
    segments.shuffle(rng);
    let wanted = rng.gen_range(1..=segments.len().min(4));
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    for (l, r) in segments {
        if chosen.len() == wanted {
            break;
        }
        if chosen.iter().all(|&(a, b)| r < a || b < l) {
            chosen.push((l, r));
        }
    }
    let mut pairs = Vec::new();
    for (l, r) in chosen {
        segment_pairs(letters, l, r, &mut pairs);
    }
    Some(Cancellation::new(pairs))
}
