//! Neighbourhoods on `BF(ω)`: letter balls `B(w, a) = {wu : every letter of
//! u has index > a}` and metric balls `B(w, ε) = {v : d(w, v) < ε}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::ordered_abelian::{AlphabetIndex, ZVector};
use crate::words::{word_dist, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetterBall {
    pub center: Word,
    pub threshold: AlphabetIndex,
}

impl LetterBall {
    pub fn new(center: Word, threshold: AlphabetIndex) -> Self {
        LetterBall { center: center.reduce(), threshold }
    }

    pub fn contains(&self, v: &Word) -> bool {
        in_letter_ball(&self.center, self.threshold, v)
    }
}

impl fmt::Display for LetterBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({}, {})", self.center, self.threshold)
    }
}

pub fn in_letter_ball(w: &Word, a: AlphabetIndex, v: &Word) -> bool {
    w.inverse().multiply(v).letters().iter().all(|l| l.index > a)
}

pub fn in_metric_ball(w: &Word, eps: &ZVector, v: &Word) -> Result<bool> {
    if !eps.is_positive() {
        return Err(Error::NonPositiveRadius(eps.to_string()));
    }
    Ok(word_dist(w, v) < *eps)
}

/// Radii with leading index `a`, used to exercise both inclusions.
pub fn radii_led_by(a: AlphabetIndex) -> Vec<ZVector> {
    let unit = ZVector::unit(a);
    let mut out = vec![unit.clone(), unit.scale(2)];
    if let Some(b) = a.successor() {
        let eb = ZVector::unit(b);
        out.push(&unit - &eb.scale(3));
        out.push(&unit + &eb.scale(4));
        if let Some(c) = b.successor() {
            out.push(&(&unit - &eb) + &ZVector::unit(c).scale(2));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InclusionFailure {
    /// `v ∈ B(w, e_a)` but `v ∉ B(w, a)`.
    MetricNotInLetter { w: Word, a: AlphabetIndex, v: Word },
    /// `v ∈ B(w, b)` but `v ∉ B(w, ε)`, with `b` the successor of the
    /// leading index of `ε`.
    LetterNotInMetric { w: Word, eps: ZVector, v: Word },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InclusionReport {
    pub checked: usize,
    pub failures: Vec<InclusionFailure>,
}

/// Checks `B(w, e_a) ⊆ B(w, a)` and `B(w, b) ⊆ B(w, ε)` for every center
/// and candidate in `words` and every threshold in `thresholds`.
pub fn check_ball_inclusions(words: &[Word], thresholds: &[AlphabetIndex]) -> InclusionReport {
    let mut report = InclusionReport::default();
    let radii: Vec<(AlphabetIndex, ZVector, Vec<ZVector>)> =
        thresholds.iter().map(|&a| (a, ZVector::unit(a), radii_led_by(a))).collect();
    for w in words {
        let wi = w.inverse();
        for v in words {
            let u = wi.multiply(v);
            let d = u.length();
            // u has every letter above `a` iff its least index is above `a`
            let least = u.letters().iter().map(|l| l.index).min();
            let above = |a: AlphabetIndex| least.is_none_or(|m| m > a);
            for (a, unit, eps_list) in &radii {
                report.checked += 1;
                if d < *unit && !above(*a) {
                    report.failures.push(InclusionFailure::MetricNotInLetter { w: w.clone(), a: *a, v: v.clone() });
                }
                if !a.successor().is_some_and(above) {
                    continue;
                }
                for eps in eps_list.iter().filter(|eps| d >= **eps) {
                    report.failures.push(InclusionFailure::LetterNotInMetric {
                        w: w.clone(),
                        eps: eps.clone(),
                        v: v.clone(),
                    });
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordered_abelian::Alphabet;
    use crate::sample::reduced_words;
    use crate::words::WordStream;

    fn w(s: &str) -> Word {
        Word::parse(s, Alphabet::Omega).unwrap()
    }

    fn z(c: &[i64]) -> ZVector {
        ZVector::from_coords(c)
    }

    const A3: AlphabetIndex = AlphabetIndex::Rank(3);

    #[test]
    fn letter_ball_examples() {
        assert!(in_letter_ball(&w("a1 a2"), A3, &w("a1 a2")));
        assert!(in_letter_ball(&w("a1"), A3, &w("a1 a5")));
        assert!(!in_letter_ball(&w("a1"), A3, &w("a1 a2")));
        assert!(!in_letter_ball(&w("a1"), A3, &w("a5")));
        let ball = LetterBall::new(w("a1"), A3);
        assert!(ball.contains(&w("a1 a4^-2")));
        assert_eq!(ball.to_string(), "B(a1, a3)");
    }

    #[test]
    fn metric_ball_examples() {
        assert!(in_metric_ball(&w("a2 a1"), &z(&[0, 0, 1]), &w("a2 a1")).unwrap());
        assert!(!in_metric_ball(&Word::identity(), &z(&[0, 1]), &w("a2")).unwrap());
        assert!(in_metric_ball(&Word::identity(), &z(&[1]), &w("a2^3 a5")).unwrap());
        assert!(matches!(in_metric_ball(&Word::identity(), &z(&[]), &w("a2")), Err(Error::NonPositiveRadius(_))));
        assert!(in_metric_ball(&Word::identity(), &z(&[0, -1]), &w("a2")).is_err());
    }

    #[test]
    fn inclusions_hold_on_small_words() {
        let words = reduced_words(2, 4);
        let thresholds: Vec<_> = (1..=4).map(AlphabetIndex::Rank).collect();
        let report = check_ball_inclusions(&words, &thresholds);
        assert_eq!(report.checked, words.len() * words.len() * 4);
        assert!(report.failures.is_empty(), "{:?}", &report.failures[..3.min(report.failures.len())]);
    }

    #[test]
    fn radii_lead_with_their_index() {
        for r in 1..=4 {
            let a = AlphabetIndex::Rank(r);
            for eps in radii_led_by(a) {
                assert!(eps.is_positive());
                assert_eq!(eps.leading_index(), Some(a));
            }
        }
    }

    #[test]
    fn harmonic_truncations_settle_in_letter_balls() {
        let s = WordStream::harmonic();
        for r in 1..=5u32 {
            let a = AlphabetIndex::Rank(r);
            for k in (r as u64 + 1)..=12 {
                for k2 in k..=12 {
                    let (x, y) = (s.truncate(k), s.truncate(k2));
                    assert!(in_letter_ball(&x, a, &y), "a{r} k={k} k'={k2}");
                }
            }
        }
    }
}
