//! The `Z^o`-tree `T(G)` built from a Lyndon length function, specialised
//! to the big free group.
//!
//! A point `⟨n, g⟩` is the point at distance `n` from `ι` on the segment
//! `[ι, g]`. Representatives are not unique: `⟨n, g⟩` and `⟨n, h⟩` name the
//! same point whenever `n <= c(g, h)`. Use [`point_eq`] rather than `==`, or
//! canonicalise through [`crate::bf_combinatorial::to_triple`].

use std::fmt;

use crate::error::{Error, Result};
use crate::ordered_abelian::{Alphabet, ZVector};
use crate::words::{common_prefix, gromov, word_dist, Word};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TreePoint {
    n: ZVector,
    g: Word,
}

impl TreePoint {
    /// `g` must be reduced and `0 <= n <= L(g)`.
    pub fn new(n: ZVector, g: Word) -> Result<Self> {
        g.require_reduced()?;
        if n.is_negative() || n > g.length() {
            return Err(Error::InvalidPoint(format!(
                "{n} is not in [0, L({g})] = [0, {}]",
                g.length()
            )));
        }
        Ok(TreePoint { n, g })
    }

    /// The image `⟨L(w), w⟩` of a group element.
    pub fn vertex(w: &Word) -> Self {
        let g = w.reduce();
        TreePoint { n: g.length(), g }
    }

    pub fn basepoint() -> Self {
        TreePoint { n: ZVector::zero(), g: Word::identity() }
    }

    pub fn n(&self) -> &ZVector {
        &self.n
    }

    pub fn g(&self) -> &Word {
        &self.g
    }

    /// Whether this representative sits at the far end `g` of its segment.
    pub fn is_endpoint(&self) -> bool {
        self.n == self.g.length()
    }

    /// Parses `<n-vector> @ <word>`.
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        let (n, g) = text.split_once('@').ok_or_else(|| Error::Syntax {
            pos: 1,
            msg: "expected `<vector> @ <word>`".into(),
        })?;
        let n: ZVector = n.parse()?;
        alphabet.check(&n)?;
        let g = Word::parse(g, alphabet)?;
        TreePoint::new(n, g)
    }
}

impl fmt::Display for TreePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ {}", self.n, self.g)
    }
}

impl fmt::Debug for TreePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}, {}⟩", self.n, self.g)
    }
}

/// `2 c(g, h) = L(g) + L(h) - L(g^-1 h)`, kept doubled so nothing leaves `Λ`.
fn doubled_gromov(g: &Word, h: &Word) -> ZVector {
    &(&g.length() + &h.length()) - &word_dist(g, h)
}

/// Same point of `T(G)`: `n = m` and `n <= c(g, h)`.
pub fn point_eq(p: &TreePoint, q: &TreePoint) -> bool {
    p.n == q.n && p.n <= gromov(&p.g, &q.g)
}

/// `n + m - 2 min{n, m, c(g, h)}`.
pub fn tree_dist(p: &TreePoint, q: &TreePoint) -> ZVector {
    let two_n = p.n.scale(2);
    let two_m = q.n.scale(2);
    let two_c = doubled_gromov(&p.g, &q.g);
    let two_min = two_n.lex_min(&two_m).lex_min(&two_c);
    &(&p.n + &q.n) - two_min
}

/// Left action of `h` on `T(BF)`: `⟨n, g⟩` goes to the point of `[h, hg]` at
/// distance `n` from `h`.
pub fn tree_act(h: &Word, p: &TreePoint) -> TreePoint {
    let h = h.reduce();
    let c = gromov(&p.g, &h.inverse());
    let lh = h.length();
    if p.n <= c {
        TreePoint { n: &lh - &p.n, g: h }
    } else {
        let n = &(&lh + &p.n) - &c.scale(2);
        TreePoint { n, g: h.multiply(&p.g) }
    }
}

/// A representative `q` with `tree_act(h, q) = target`, built as in the
/// surjectivity half of the isometry argument.
pub fn act_preimage(h: &Word, target: &TreePoint) -> TreePoint {
    let h = h.reduce();
    let c = gromov(&h, &target.g);
    if target.n <= c {
        TreePoint { n: &h.length() - &target.n, g: h.inverse() }
    } else {
        let n = &(&h.length() + &target.n) - &c.scale(2);
        TreePoint { n, g: h.inverse().multiply(&target.g) }
    }
}

/// The median `u` of three words: `[v, x] ∩ [v, y] = [v, u]`.
pub fn y_point(v: &Word, x: &Word, y: &Word) -> Word {
    let v = v.reduce();
    let vi = v.inverse();
    let px = vi.multiply(x);
    let py = vi.multiply(y);
    let stem = common_prefix(&px, &py).expect("products are reduced");
    v.multiply(&stem)
}

/// A group with a candidate `Λ`-valued length function.
pub trait LengthOracle {
    type Element: Clone + PartialEq + fmt::Display;

    fn identity(&self) -> Self::Element;
    fn multiply(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn inverse(&self, a: &Self::Element) -> Self::Element;
    fn length(&self, a: &Self::Element) -> ZVector;
}

/// `BF(ω)` with `L(w)` counting letters per index.
#[derive(Clone, Copy, Debug, Default)]
pub struct BigFreeLength;

impl LengthOracle for BigFreeLength {
    type Element = Word;

    fn identity(&self) -> Word {
        Word::identity()
    }

    fn multiply(&self, a: &Word, b: &Word) -> Word {
        a.multiply(b)
    }

    fn inverse(&self, a: &Word) -> Word {
        a.inverse().reduce()
    }

    fn length(&self, a: &Word) -> ZVector {
        a.length()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `L(g) = 0` does not match `g = 1`.
    Definiteness { element: String, length: String },
    /// `L(g) != L(g^-1)`.
    InverseSymmetry { element: String },
    /// `c(g, h)` is not in `Λ`.
    NonIntegral { g: String, h: String },
    /// `c(g, h) < min{c(g, k), c(h, k)}`.
    Ultrametric { g: String, h: String, k: String, c_gh: String, c_gk: String, c_hk: String },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::Definiteness { element, length } => {
                write!(f, "axiom (1) fails at {element}: L = {length}")
            }
            AxiomViolation::InverseSymmetry { element } => {
                write!(f, "axiom (2) fails at {element}: L(g) != L(g^-1)")
            }
            AxiomViolation::NonIntegral { g, h } => write!(f, "c({g}, {h}) is not in Λ"),
            AxiomViolation::Ultrametric { g, h, k, c_gh, c_gk, c_hk } => write!(
                f,
                "axiom (3) fails at ({g}, {h}, {k}): c(g,h) = {c_gh} < min{{{c_gk}, {c_hk}}}"
            ),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxiomReport {
    pub elements: usize,
    pub triples: usize,
}

/// Checks the three length-function axioms, plus integrality of every
/// Gromov product, on `sample` (closed under inverses first). Reports the
/// first violation found in sample order.
#[allow(clippy::result_large_err)]
pub fn check_length_axioms<O: LengthOracle>(
    oracle: &O,
    sample: &[O::Element],
) -> std::result::Result<AxiomReport, AxiomViolation> {
    let mut elems: Vec<O::Element> = sample.to_vec();
    for g in sample {
        let gi = oracle.inverse(g);
        if !elems.contains(&gi) {
            elems.push(gi);
        }
    }
    let one = oracle.identity();
    let lengths: Vec<ZVector> = elems.iter().map(|g| oracle.length(g)).collect();

    for (g, l) in elems.iter().zip(&lengths) {
        if l.is_zero() != (*g == one) {
            return Err(AxiomViolation::Definiteness { element: g.to_string(), length: l.to_string() });
        }
        if oracle.length(&oracle.inverse(g)) != *l {
            return Err(AxiomViolation::InverseSymmetry { element: g.to_string() });
        }
    }

    let n = elems.len();
    let mut c = vec![ZVector::zero(); n * n];
    for i in 0..n {
        let gi = oracle.inverse(&elems[i]);
        for j in 0..n {
            let prod = oracle.multiply(&gi, &elems[j]);
            let doubled = &(&lengths[i] + &lengths[j]) - &oracle.length(&prod);
            c[i * n + j] = doubled.half_exact().map_err(|_| AxiomViolation::NonIntegral {
                g: elems[i].to_string(),
                h: elems[j].to_string(),
            })?;
        }
    }

    for i in 0..n {
        for j in 0..n {
            let cgh = &c[i * n + j];
            for k in 0..n {
                let cgk = &c[i * n + k];
                let chk = &c[j * n + k];
                if cgh < cgk.lex_min(chk) {
                    return Err(AxiomViolation::Ultrametric {
                        g: elems[i].to_string(),
                        h: elems[j].to_string(),
                        k: elems[k].to_string(),
                        c_gh: cgh.to_string(),
                        c_gk: cgk.to_string(),
                        c_hk: chk.to_string(),
                    });
                }
            }
        }
    }
    Ok(AxiomReport { elements: n, triples: n * n * n })
}
