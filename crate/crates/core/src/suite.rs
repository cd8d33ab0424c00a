//! Seeded property batches over every module. Each batch draws from its own
//! ChaCha stream, so results do not depend on scheduling.

use std::fmt;
use std::time::{Duration, Instant};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bf_combinatorial::{
    act_triple, circle_dist, from_triple, orbit_witness, project, quotient_dist_via_representatives, to_triple,
    top_truncation_point, triple_dist, CirclePoint, EdgeRelation, EdgeTriple, TreeLocation,
};
use crate::cayley::{
    ball_graph, cayley_act, cayley_dist, embed_compare, offset_grid, shortcut_checks, unit_grid, CayleyPoint,
    ShortcutGuard, DEFAULT_VERTEX_CAP,
};
use crate::ordered_abelian::{AlphabetIndex, Coordinate, LexVector, ZVector};
use crate::sample::{
    random_cancellation, random_cayley_point, random_edge_offset, random_letter, random_location,
    random_reduced_word, random_related_words, random_tree_point, random_word, reduced_words,
};
use crate::topology::check_ball_inclusions;
use crate::tree::{act_preimage, check_length_axioms, point_eq, tree_act, tree_dist, y_point, BigFreeLength, TreePoint};
use crate::words::{common_prefix, gromov, word_dist, Letter, Word, WordStream};

pub const DEFAULT_SAMPLES: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 0, samples: DEFAULT_SAMPLES }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BatchResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl BatchResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub samples: usize,
    pub batches: Vec<BatchResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.batches.iter().all(BatchResult::passed)
    }

    pub fn batch(&self, name: &str) -> Option<&BatchResult> {
        self.batches.iter().find(|b| b.name == name)
    }
}

/// Timings are left out so the text is reproducible.
impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed={} samples={}", self.seed, self.samples)?;
        for b in &self.batches {
            let status = if b.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "{status} {} cases={} failures={}", b.name, b.cases, b.failures)?;
            if let Some(msg) = &b.first_failure {
                writeln!(f, "     first failure: {msg}")?;
            }
            for note in &b.notes {
                writeln!(f, "     note: {note}")?;
            }
        }
        let passed = self.batches.iter().filter(|b| b.passed()).count();
        write!(f, "{passed} passed, {} failed", self.batches.len() - passed)
    }
}

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: usize,
    first_failure: Option<String>,
    notes: Vec<String>,
}

impl Tally {
    fn case(&mut self) {
        self.cases += 1;
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(msg());
            }
        }
    }
}

type Batch = fn(&mut ChaCha8Rng, usize, &mut Tally);

const BATCHES: &[(&str, Batch)] = &[
    ("ordered_abelian/order-axioms", order_axioms),
    ("ordered_abelian/abs-and-half", abs_and_half),
    ("words/unique-reduced-form", unique_reduced_form),
    ("words/cancellation-reduces", cancellation_reduces),
    ("words/metric-axioms", word_metric_axioms),
    ("words/metric-axioms-exhaustive", word_metric_axioms_exhaustive),
    ("words/hyperbolicity", word_hyperbolicity),
    ("words/hyperbolicity-exhaustive", word_hyperbolicity_exhaustive),
    ("words/prefix-and-subwords", prefix_and_subwords),
    ("words/nonnegative-lengths", nonnegative_lengths),
    ("words/stream-cauchy", stream_cauchy),
    ("tree/length-axioms", tree_length_axioms),
    ("tree/metric-axioms", tree_metric_axioms),
    ("tree/isometric-action", tree_isometric_action),
    ("tree/action-laws", tree_action_laws),
    ("tree/free-no-inversions", tree_free_no_inversions),
    ("tree/preimage", tree_preimage),
    ("tree/hyperbolicity", tree_hyperbolicity),
    ("tree/geodesic-alignment", tree_geodesic_alignment),
    ("tree/median", tree_median),
    ("bf_combinatorial/round-trip", triple_round_trip),
    ("bf_combinatorial/equivariance", triple_equivariance),
    ("bf_combinatorial/edge-interiors", edge_interiors),
    ("bf_combinatorial/quotient-orbits", quotient_orbits),
    ("bf_combinatorial/quotient-surjective", quotient_surjective),
    ("bf_combinatorial/circle-metric", circle_metric),
    ("bf_combinatorial/top-truncations", top_truncations),
    ("bf_combinatorial/shortcut-report", triple_shortcut_report),
    ("cayley/metric-axioms", cayley_metric_axioms),
    ("cayley/hyperbolicity", cayley_hyperbolicity),
    ("cayley/isometric-action", cayley_isometric_action),
    ("cayley/shortcut-guards", cayley_shortcut_guards),
    ("cayley/embedding", cayley_embedding),
    ("cayley/ball-trees", cayley_ball_trees),
    ("topology/ball-inclusions", topology_ball_inclusions),
    ("topology/truncation-convergence", truncation_convergence),
];

pub fn batch_names() -> Vec<&'static str> {
    BATCHES.iter().map(|(name, _)| *name).collect()
}

fn run_batch(index: usize, name: &'static str, batch: Batch, config: SuiteConfig) -> BatchResult {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index as u64);
    let mut tally = Tally::default();
    let start = Instant::now();
    batch(&mut rng, config.samples, &mut tally);
    BatchResult {
        name,
        cases: tally.cases,
        failures: tally.failures,
        first_failure: tally.first_failure,
        notes: tally.notes,
        elapsed: start.elapsed(),
    }
}

/// Runs every batch, concurrently, and reports them in a fixed order.
pub fn run_suite(config: SuiteConfig) -> SuiteReport {
    let batches = std::thread::scope(|scope| {
        let handles: Vec<_> = BATCHES
            .iter()
            .enumerate()
            .map(|(i, &(name, batch))| scope.spawn(move || run_batch(i, name, batch, config)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("batches do not panic")).collect()
    });
    SuiteReport { seed: config.seed, samples: config.samples, batches }
}

/// Runs the named batches only, sequentially.
pub fn run_batches(config: SuiteConfig, names: &[&str]) -> SuiteReport {
    let batches = BATCHES
        .iter()
        .enumerate()
        .filter(|(_, (name, _))| names.contains(name))
        .map(|(i, &(name, batch))| run_batch(i, name, batch, config))
        .collect();
    SuiteReport { seed: config.seed, samples: config.samples, batches }
}

fn metric_axioms<P: fmt::Display, C: Coordinate>(
    tally: &mut Tally,
    [x, y, z]: [&P; 3],
    d: impl Fn(&P, &P) -> LexVector<C>,
    same: impl Fn(&P, &P) -> bool,
) {
    tally.case();
    let (dxy, dyx, dyz, dxz) = (d(x, y), d(y, x), d(y, z), d(x, z));
    tally.check(d(x, x).is_zero(), || format!("d({x}, {x}) != 0"));
    tally.check(dxy == dyx, || format!("d({x}, {y}) = {dxy} but d({y}, {x}) = {dyx}"));
    tally.check(!dxy.is_negative(), || format!("d({x}, {y}) = {dxy} < 0"));
    tally.check(dxy.is_zero() == same(x, y), || format!("d({x}, {y}) = {dxy} disagrees with equality"));
    let via = &dxy + &dyz;
    tally.check(dxz <= via, || format!("triangle fails at ({x}, {y}, {z}): {dxz} > {via}"));
}

fn two_smallest_equal<T: Ord + Clone>(mut v: [T; 3]) -> bool {
    v.sort();
    v[0] == v[1]
}

fn triple_of_words(rng: &mut ChaCha8Rng, max_len: usize, max_index: u32) -> [Word; 3] {
    let v = random_related_words(rng, 3, max_len, max_index);
    [v[0].clone(), v[1].clone(), v[2].clone()]
}

fn triple_of_points(rng: &mut ChaCha8Rng) -> [TreePoint; 3] {
    triple_of_words(rng, 10, 4).map(|g| random_tree_point(rng, g))
}

fn dense3(v: &ZVector) -> [i64; 3] {
    [1, 2, 3].map(|r| v.get(AlphabetIndex::Rank(r)))
}

fn small_vectors() -> Vec<ZVector> {
    let mut out = Vec::new();
    for a in -2..=2 {
        for b in -2..=2 {
            for c in -2..=2 {
                out.push(ZVector::from_coords(&[a, b, c]));
            }
        }
    }
    out
}

fn order_axioms(_: &mut ChaCha8Rng, _: usize, tally: &mut Tally) {
    let vs = small_vectors();
    let n = vs.len();
    let sums: Vec<ZVector> = vs.iter().flat_map(|x| vs.iter().map(move |z| x + z)).collect();
    for (i, x) in vs.iter().enumerate() {
        for (j, y) in vs.iter().enumerate() {
            tally.case();
            tally.check(x.cmp(y) == dense3(x).cmp(&dense3(y)), || format!("{x} vs {y} disagrees with dense order"));
            for (k, z) in vs.iter().enumerate() {
                if x <= y && y <= z {
                    tally.check(x <= z, || format!("transitivity fails at {x}, {y}, {z}"));
                }
                let shifted = sums[i * n + k].cmp(&sums[j * n + k]);
                tally.check(x.cmp(y) == shifted, || format!("translation by {z} changes {x} vs {y}"));
            }
        }
    }
}

fn abs_and_half(_: &mut ChaCha8Rng, _: usize, tally: &mut Tally) {
    let vs = small_vectors();
    for x in &vs {
        tally.case();
        tally.check(!x.abs().is_negative() && x.abs().is_zero() == x.is_zero(), || format!("abs({x})"));
        tally.check((x + x).half_exact().as_ref() == Ok(x), || format!("half_exact({x} + {x})"));
        for y in &vs {
            tally.check((x + y).abs() <= &x.abs() + &y.abs(), || format!("|{x} + {y}| > |{x}| + |{y}|"));
        }
    }
}

fn unique_reduced_form(rng: &mut ChaCha8Rng, samples: usize, tally: &mut Tally) {
    for _ in 0..samples {
        tally.case();
        let w = random_word(rng, 40, 8);
        let target = w.reduce();
        for _ in 0..5 {
            let mut cur = w.clone();
            while let Some(c) = random_cancellation(rng, &cur) {
                match c.apply(&cur) {
                    Ok(next) => cur = next,
                    Err(e) => {
                        tally.check(false, || format!("{c} on {cur}: {e}"));
                        break;
                    }
                }
            }
            tally.check(cur.letters() == target.letters(), || format!("{w} ended at {cur}, not {target}"));
        }
    }
}

fn cancellation_reduces(rng: &mut ChaCha8Rng, samples: usize, tally: &mut Tally) {
    for _ in 0..samples {
        let w = random_word(rng, 24, 4);
        let Some(c) = random_cancellation(rng, &w) else { continue };
        tally.case();
        tally.check(c.verify(&w).is_ok(), || format!("{c} rejected on {w}"));
        let after = c.apply(&w).map(|v| v.reduce());
        tally.check(after.as_ref() == Ok(&w.reduce()), || format!("{c} on {w} changed the reduced form"));
    }
}

fn word_metric_axioms(rng: &mut ChaCha8Rng, samples: usize, tally: &mut Tally) {
    for _ in 0..samples {
        let [x, y, z] = triple_of_words(rng, 12, 5);
        metric_axioms(tally, [&x, &y, &z], word_dist, |a, b| a == b);
    }
}

fn word_metric_axioms_exhaustive(_: &mut ChaCha8Rng, _: usize, tally: &mut Tally) {
    let words = reduced_words(4, 3);
    let n = words.len();
    let mut d = vec![[0i64; 3]; n * n];
    for i in 0..n {
        for j in 0..n {
            let v = word_dist(&words[i], &words[j]);
            tally.check(v.support().all(|k| k <= AlphabetIndex::Rank(3)), || format!("support of {v}"));
            d[i * n + j] = dense3(&v);
        }
    }
    for i in 0..n {
        for j in 0..n {
            tally.case();
            let dij = d[i * n + j];
            tally.check(dij == d[j * n + i], || format!("asymmetric at ({}, {})", words[i], words[j]));
            tally.check(dij >= [0; 3], || format!("negative at ({}, {})", words[i], words[j]));
            tally.check((dij == [0; 3]) == (i == j), || format!("definiteness at ({}, {})", words[i], words[j]));
        }
    }
    // symmetry is already checked, so i < k covers every inequality
    for i in 0..n {
        for k in i + 1..n {
            let dik = d[i * n + k];
            for j in 0..n {
                let (a, b) = (d[i * n + j], d[j * n + k]);
                let via = [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
                if dik > via {
                    tally.check(false, || format!("triangle fails at ({}, {}, {})", words[i], words[j], words[k]));
                }
            }
        }
    }
    tally.notes.push(format!("{n} words, {} triangle inequalities", n * (n - 1) / 2 * n));
}

fn word_hyperbolicity(rng: &mut ChaCha8Rng, samples: usize, tally: &mut Tally) {
    for _ in 0..samples {
        tally.case();
        let [x, y, z] = triple_of_words(rng, 16, 5);
        let products = [gromov(&x, &y), gromov(&x, &z), gromov(&y, &z)];
        tally.check(two_smallest_equal(products), || format!("({x}, {y}, {z})"));
    }
}

fn word_hyperbolicity_exhaustive(_: &mut ChaCha8Rng, _: usize, tally: &mut Tally) {
    let words = reduced_words(4, 3);
    let n = words.len();
    let mut products: Vec<ZVector> = Vec::with_capacity(n * n);
    for x in &words {
        for y in &words {
            products.push(gromov(x, y));
        }
    }
    // order-preserving ranks keep the comparison exact
    let mut distinct = products.clone();
    distinct.sort();
    distinct.dedup();
    let rank: Vec<u32> = products.iter().map(|p| distinct.binary_search(p).expect("present") as u32).collect();
    for i in 0..n {
        for j in i + 1..n {
            let cij = rank[i * n + j];
            for k in j + 1..n {
                tally.case();
                if !two_smallest_equal([cij, rank[i * n + k], rank[j * n + k]]) {
                    tally.check(false, || format!("({}, {}, {})", words[i], words[j], words[k]));
                }
            }
        }
    }
}

fn prefix_and_subwords(rng: &mut ChaCha8Rng, samples: usize, tally: &mut Tally) {
    for _ in 0..samples / 4 {
        tally.case();
        let [g, h, _] = triple_of_words(rng, 14, 4);
        let prefix = common_prefix(&g, &h).expect("reduced");
        tally.check(gromov(&g, &h) == prefix.length(), || format!("c({g}, {h}) vs {prefix}"));
        let subs = g.subwords().expect("reduced");
        let increasing = subs.windows(2).all(|p| p[0].length() < p[1].length());
        tally.check(increasing && subs.len() == g.len() + 1, || format!("subwords of {g}"));
        for v in [&h, &prefix, &g.prefix(rng.gen_range(0..=g.len()))] {
            let claimed = v.is_subword_of(&g).expect("reduced");
            tally.check(claimed == subs.contains(v), || format!("is_subword_of({v}, {g})"));
        }
    }
}

fn nonnegative_lengths(_: &mut ChaCha8Rng, _: usize, tally: &mut Tally) {
    let target = ZVector::from_coords(&[1, -1]);
    for w in reduced_words(4, 4) {
        tally.case();
        let l = w.length();
        tally.check(l.is_componentwise_nonnegative() && l != target, || format!("L({w}) = {l}"));
    }
}

fn stream_cauchy(_: &mut ChaCha8Rng, _: usize, tally: &mut Tally) {
    let s = WordStream::harmonic();
    for j in 0..40u64 {
        for k in 0..40u64 {
            tally.case();
            let d = word_dist(&s.truncate(j), &s.truncate(k));
            let m = AlphabetIndex::Rank(j.min(k) as u32);
            tally.check(d.support().all(|i| i > m), || format!("truncations {j}, {k}: {d}"));
        }
    }
}

fn tree_length_axioms(rng: &mut ChaCha8Rng, _: usize, tally: &mut Tally) {
    let mut sample = reduced_words(3, 2);
    sample.extend(random_related_words(rng, 40, 8, 4));
    tally.case();
    match check_length_axioms(&BigFreeLength, &sample) {
        Ok(report) => tally.notes.push(format!("{} elements, {} triples", report.elements, report.triples)),
        Err(v) => tally.check(false, || v.to_string()),
    }
}

fn tree_metric_axioms(rng: &mut ChaCha8Rng, samples: usize, tally: &mut Tally) {
    for _ in 0..samples {
        let [p, q, r] = triple_of_points(rng);
        metric_axioms(tally, [&p, &q, &r], tree_dist, point_eq);
    }
}

fn tree_isometric_action(rng: &mut ChaCha8Rng, samples: usize, tally: &mut Tally) {
    for _ in 0..samples {
        tally.case();
        let [p, q, _] = triple_of_points(rng);
        let h = random_reduced_word(rng, 8, 4);
        let (hp, hq) = (tree_act(&h, &p), tree_act(&h, &q));
        tally.check(tree_dist(&hp, &hq) == tree_dist(&p, &q), || format!("h = {h}, p = {p}, q = {q}"));
    }
}

fn tree_action_laws(rng: &mut ChaCha8Rng, samples: usize, tally: &mut Tally) {
    for _ in 0..samples {
        tally.case();
        let [p, _, _] = triple_of_points(rng);
        let (h1, h2) = (random_reduced_word(rng, 6, 4), random_reduced_word(rng, 6, 4));
        tally.check(point_eq(&tree_act(&Word::identity(), &p), &p), || format!("ι·{p}"));
        let nested = tree_act(&h1, &tree_act(&h2, &p));
        let direct = tree_act(&h1.multiply(&h2), &p);
        tally.check(point_eq(&nested, &direct), || format!("h1 = {h1}, h2 = {h2}, p = {p}"));
    }
}

fn nonidentity(rng: &mut ChaCha8Rng, max_len: usize, max_index: u32) -> Word {
    loop {
        let u = random_reduced_word(rng, max_len, max_index);
        if !u.is_identity() {
            return u;
        }
    }
}

fn tree_free_no_inversions(rng: &mut ChaCha8Rng, samples: usize, tally: &mut Tally) {
    for _ in 0..samples {
        tally.case();
        let [p, _, _] = triple_of_points(rng);
        let u = nonidentity(rng, 6, 4);
        tally.check(!point_eq(&tree_act(&u, &p), &p), || format!("{u} fixes {p}"));

        let v = random_reduced_word(rng, 8, 4);
        let va = v.times(random_letter(rng, 4));
        let (x, y) = (TreePoint::vertex(&v), TreePoint::vertex(&va));
        // the only candidate that could swap the endpoints
        for u in [u, va.multiply(&v.inverse())] {
            let swaps = point_eq(&tree_act(&u, &x), &y) && point_eq(&tree_act(&u, &y), &x);
            tally.check(!swaps, || format!("{u} inverts [{v}, {va}]"));
        }
    }
}

fn tree_preimage(rng: &mut ChaCha8Rng, samples: usize, tally: &mut Tally) {
    for _ in 0..samples {
        tally.case();
        let [q, _, _] = triple_of_points(rng);
        let h = random_reduced_word(rng, 8, 4);
        let pre = act_preimage(&h, &q);
        tally.check(point_eq(&tree_act(&h, &pre), &q), || format!("h = {h}, q = {q}, preimage {pre}"));
    }
}

fn tree_hyperbolicity(rng: &mut ChaCha8Rng, samples: usize, tally: &mut Tally) {
    let base = TreePoint::basepoint();
    for _ in 0..samples {
        tally.case();
        let [p, q, r] = triple_of_points(rng);
        let doubled = |x: &TreePoint, y: &TreePoint| &(&tree_dist(&base, x) + &tree_dist(&base, y)) - &tree_dist(x, y);
        let products = [doubled(&p, &q), doubled(&p, &r), doubled(&q, &r)];
        tally.check(two_smallest_equal(products), || format!("({p}, {q}, {r})"));
    }
}

fn tree_geodesic_alignment(rng: &mut ChaCha8Rng, samples: usize, tally: &mut Tally) {
    let base = TreePoint::basepoint();
    for _ in 0..samples {
        tally.case();
        let [p, _, _] = triple_of_points(rng);
        let end = TreePoint::vertex(p.g());
        let total = &tree_dist(&base, &p) + &tree_dist(&p, &end);
        tally.check(total == p.g().length(), || format!("{p}"));
    }
}

fn tree_median(rng: &mut ChaCha8Rng, samples: usize, tally: &mut Tally) {
    for _ in 0..samples {
        tally.case();
        let [v, x, y] = triple_of_words(rng, 12, 4);
        let u = y_point(&v, &x, &y);
        let on = |a: &Word, b: &Word| &word_dist(a, &u) + &word_dist(&u, b) == word_dist(a, b);
        tally.check(on(&v, &x) && on(&v, &y) && on(&x, &y), || format!("Y({v}, {x}, {y}) = {u}"));
    }
}

fn location(rng: &mut ChaCha8Rng) -> TreeLocation {
    let w = random_reduced_word(rng, 8, 4);
    random_location(rng, w, 4)
}

fn triple_round_trip(rng: &mut ChaCha8Rng, samples: usize, tally: &mut Tally) {
    for _ in 0..samples {
        tally.case();
        let [p, _, _] = triple_of_points(rng);
        let loc = to_triple(&p);
        tally.check(point_eq(&from_triple(&loc), &p), || format!("{p} -> {loc}"));
        let e = location(rng);
        let back = to_triple(&from_triple(&e));
        tally.check(back == e, || format!("{e} -> {back}"));
    }
}

fn triple_equivariance(rng: &mut ChaCha8Rng, samples: usize, tally: &mut Tally) {
    for _ in 0..samples {
        tally.case();
        let e = location(rng);
        let u = random_reduced_word(rng, 8, 4);
        let moved = act_triple(&u, &e);
        tally.check(point_eq(&from_triple(&moved), &tree_act(&u, &from_triple(&e))), || format!("{u}·{e}"));
        tally.check(to_triple(&from_triple(&moved)) == moved, || format!("{u}·{e} = {moved} is not canonical"));
    }
}

fn edge_interiors(rng: &mut ChaCha8Rng, samples: usize, tally: &mut Tally) {
    for _ in 0..samples {
        let e = location(rng);
        if matches!(e, TreeLocation::Vertex(_)) {
            continue;
        }
        tally.case();
        let p = from_triple(&e);
        tally.check(matches!(to_triple(&p), TreeLocation::Edge(_)), || format!("{e} came back as a word"));
    }
}

fn quotient_orbits(rng: &mut ChaCha8Rng, samples: usize, tally: &mut Tally) {
    let mut coincident = 0;
    for _ in 0..samples {
        tally.case();
        let e = location(rng);
        let u = random_reduced_word(rng, 8, 4);
        let moved = act_triple(&u, &e);
        tally.check(project(&moved) == project(&e), || format!("{u}·{e} changes the projection"));
        let witness = orbit_witness(&e, &moved);
        tally.check(witness.is_some_and(|x| act_triple(&x, &e) == moved), || format!("no witness for {e}, {moved}"));

        let other = location(rng);
        match orbit_witness(&e, &other) {
            Some(x) => {
                coincident += 1;
                tally.check(act_triple(&x, &e) == other, || format!("bad witness {x} for {e}, {other}"));
            }
            None => tally.check(project(&e) != project(&other), || format!("no witness for {e}, {other}")),
        }
    }
    tally.notes.push(format!("{coincident} independent pairs shared a projection"));
}

fn circle_grid(a: AlphabetIndex) -> Vec<ZVector> {
    let rank = a.rank().expect("ranked circle");
    let next = ZVector::unit(AlphabetIndex::Rank(rank + 1));
    (0..100i64)
        .map(|i| if i < 50 { next.scale(i) } else { &ZVector::unit(a) - &next.scale(100 - i) })
        .collect()
}

fn quotient_surjective(_: &mut ChaCha8Rng, _: usize, tally: &mut Tally) {
    for r in 1..=4 {
        let a = AlphabetIndex::Rank(r);
        for s in circle_grid(a) {
            tally.case();
            let target = CirclePoint::new(a, s.clone()).expect("grid lies in [0, L(a))");
            let loc = EdgeTriple::new(Word::identity(), Letter::gen(r), s.clone()).expect("canonical");
            tally.check(project(&loc) == target, || format!("C({a}) @ {s}"));
        }
    }
}

fn circle_metric(rng: &mut ChaCha8Rng, samples: usize, tally: &mut Tally) {
    let mut same_circle = 0;
    for _ in 0..samples {
        let shared = rng.gen_bool(0.5).then(|| AlphabetIndex::Rank(rng.gen_range(1..=4)));
        let point = |rng: &mut ChaCha8Rng| match shared {
            Some(a) => CirclePoint::new(a, random_edge_offset(rng, a, true)).expect("in range"),
            None => project(&location(rng)),
        };
        let [x, y, z] = [point(rng), point(rng), point(rng)];
        metric_axioms(tally, [&x, &y, &z], circle_dist, |a, b| a == b);
        same_circle += usize::from(shared.is_some());
        let (d, via) = (circle_dist(&x, &y), quotient_dist_via_representatives(&x, &y));
        tally.check(d == via, || format!("{x}, {y}: {d} vs representatives {via}"));
    }
    tally.notes.push(format!("{same_circle} triples drawn from a single circle"));
}

fn top_truncations(_: &mut ChaCha8Rng, _: usize, tally: &mut Tally) {
    for k in 1..=20 {
        tally.case();
        let loc = to_triple(&top_truncation_point(k));
        let ok = matches!(&loc, TreeLocation::Edge(e) if e.letter() == Letter::gen(k));
        tally.check(ok, || format!("k = {k}: {loc}"));
    }
}

/// Same-edge and sibling pairs must match the closed form; other pairs are
/// counted only.
fn triple_shortcut_report(rng: &mut ChaCha8Rng, samples: usize, tally: &mut Tally) {
    let mut counts = [(0usize, 0usize); 4];
    for i in 0..samples {
        let w = random_reduced_word(rng, 6, 4);
        let x = random_location(rng, w.clone(), 4);
        let y = match (i % 4, &x) {
            (0, TreeLocation::Edge(e)) => {
                EdgeTriple::new(w.clone(), e.letter(), random_edge_offset(rng, e.letter().index, false))
                    .expect("canonical")
            }
            (1, _) => random_location(rng, w.clone(), 4),
            (2, TreeLocation::Edge(e)) => {
                let tail = random_reduced_word(rng, 4, 4);
                random_location(rng, e.head().multiply(&tail), 4)
            }
            _ => location(rng),
        };
        tally.case();
        let td = triple_dist(&x, &y);
        let slot = match td.relation {
            EdgeRelation::SameEdge => 0,
            EdgeRelation::Sibling => 1,
            EdgeRelation::Nested => 2,
            EdgeRelation::Apart => 3,
        };
        counts[slot].0 += 1;
        if !td.shortcut_agrees() {
            counts[slot].1 += 1;
        }
        if slot < 2 {
            tally.check(td.shortcut_agrees(), || format!("{x}, {y}: {} vs {}", td.exact, td.shortcut));
        }
        tally.check(td.exact == tree_dist(&from_triple(&x), &from_triple(&y)), || format!("{x}, {y}"));
    }
    let names = ["same-edge", "sibling", "nested", "apart"];
    for (name, (total, off)) in names.iter().zip(counts) {
        tally.notes.push(format!("{name}: {off} of {total} pairs differ from the closed form"));
    }
    let x = EdgeTriple::new(Word::identity(), Letter::gen(1), ZVector::from_coords(&[0, 1])).expect("canonical");
    let y = EdgeTriple::new(Word::from_ranks(&[1]), Letter::gen(2), ZVector::from_coords(&[0, 0, 1]))
        .expect("canonical");
    let td = triple_dist(&x, &y);
    tally.notes.push(format!("example {x} vs {y}: exact {} closed form {}", td.exact, td.shortcut));
}

fn cayley_triple(rng: &mut ChaCha8Rng) -> [CayleyPoint; 3] {
    triple_of_words(rng, 8, 4).map(|w| random_cayley_point(rng, w, 4))
}

fn cayley_metric_axioms(rng: &mut ChaCha8Rng, samples: usize, tally: &mut Tally) {
    for _ in 0..samples {
        let [x, y, z] = cayley_triple(rng);
        metric_axioms(tally, [&x, &y, &z], cayley_dist, |a, b| a == b);
    }
}

fn cayley_hyperbolicity(rng: &mut ChaCha8Rng, samples: usize, tally: &mut Tally) {
    let base = CayleyPoint::vertex(&Word::identity());
    for _ in 0..samples {
        tally.case();
        let [x, y, z] = cayley_triple(rng);
        let doubled =
            |p: &CayleyPoint, q: &CayleyPoint| &(&cayley_dist(&base, p) + &cayley_dist(&base, q)) - &cayley_dist(p, q);
        let products = [doubled(&x, &y), doubled(&x, &z), doubled(&y, &z)];
        tally.check(two_smallest_equal(products), || format!("({x}, {y}, {z})"));
    }
}

fn cayley_isometric_action(rng: &mut ChaCha8Rng, samples: usize, tally: &mut Tally) {
    for _ in 0..samples {
        tally.case();
        let [x, y, _] = cayley_triple(rng);
        let (h1, h2) = (random_reduced_word(rng, 6, 4), random_reduced_word(rng, 6, 4));
        let (hx, hy) = (cayley_act(&h1, &x), cayley_act(&h1, &y));
        tally.check(cayley_dist(&hx, &hy) == cayley_dist(&x, &y), || format!("h = {h1}, x = {x}, y = {y}"));
        tally.check(cayley_act(&Word::identity(), &x) == x, || format!("ι·{x}"));
        let nested = cayley_act(&h1, &cayley_act(&h2, &x));
        tally.check(nested == cayley_act(&h1.multiply(&h2), &x), || format!("h1 = {h1}, h2 = {h2}, x = {x}"));
    }
}

/// The branch-point form must always match. The interval forms match when
/// the guarded point is the nearer one and are otherwise the exact negation.
fn cayley_shortcut_guards(rng: &mut ChaCha8Rng, samples: usize, tally: &mut Tally) {
    let mut counts = [(0usize, 0usize); 3];
    for _ in 0..samples {
        let [x, y, _] = cayley_triple(rng);
        for check in shortcut_checks(&x, &y) {
            tally.case();
            let slot = match check.guard {
                ShortcutGuard::BranchBelowBoth => 0,
                ShortcutGuard::FirstOnSecondInterval => 1,
                ShortcutGuard::SecondOnFirstInterval => 2,
            };
            counts[slot].0 += 1;
            if check.agrees() {
                continue;
            }
            counts[slot].1 += 1;
            let flipped = slot > 0 && check.shortcut == -&check.exact;
            tally.check(flipped, || format!("{:?} at {x}, {y}: {} vs {}", check.guard, check.shortcut, check.exact));
        }
    }
    let names = ["branch below both", "first on second interval", "second on first interval"];
    for (name, (total, off)) in names.iter().zip(counts) {
        tally.notes.push(format!("{name}: guard held {total} times, {off} sign flips"));
    }
}

fn cayley_embedding(rng: &mut ChaCha8Rng, _: usize, tally: &mut Tally) {
    let t_grid = unit_grid(100);
    for _ in 0..100 {
        tally.case();
        let w = random_reduced_word(rng, 8, 5);
        let a = AlphabetIndex::Rank(rng.gen_range(1..=5));
        let report = embed_compare(&w, a, &t_grid, &offset_grid(a));
        tally.check(report.only_endpoints(a), || format!("w = {w}, a = {a}: {:?}", report.coincidences));
    }
}

fn cayley_ball_trees(rng: &mut ChaCha8Rng, _: usize, tally: &mut Tally) {
    for max_len in 0..=3 {
        for max_letter in 1..=3u32 {
            tally.case();
            let center = random_reduced_word(rng, 5, 4);
            let g = ball_graph(&center, max_len, max_letter, DEFAULT_VERTEX_CAP).expect("under the cap");
            let m = 2 * max_letter as usize;
            let expected = 1 + (0..max_len).map(|i| m * (m - 1).pow(i as u32)).sum::<usize>();
            tally.check(g.is_tree() && g.vertices.len() == expected, || format!("ball({center}, {max_len}, {max_letter})"));
        }
    }
}

fn topology_ball_inclusions(_: &mut ChaCha8Rng, _: usize, tally: &mut Tally) {
    let words = reduced_words(3, 5);
    let thresholds: Vec<_> = (1..=4).map(AlphabetIndex::Rank).collect();
    let report = check_ball_inclusions(&words, &thresholds);
    tally.cases += report.checked;
    for f in &report.failures {
        tally.check(false, || format!("{f:?}"));
    }
}

fn truncation_convergence(_: &mut ChaCha8Rng, _: usize, tally: &mut Tally) {
    let s = WordStream::harmonic();
    for r in 1..=10u32 {
        let a = AlphabetIndex::Rank(r);
        for k in r as u64 + 1..=30 {
            for k2 in k..=30 {
                tally.case();
                let u = s.truncate(k).inverse().multiply(&s.truncate(k2));
                tally.check(u.letters().iter().all(|l| l.index > a), || format!("a{r}: {k}, {k2} gives {u}"));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes_and_is_reproducible() {
        let config = SuiteConfig { seed: 11, samples: 60 };
        let names = ["words/unique-reduced-form", "tree/isometric-action", "cayley/shortcut-guards"];
        let a = run_batches(config, &names);
        let b = run_batches(config, &names);
        assert!(a.passed(), "{a}");
        assert_eq!(a.to_string(), b.to_string());
        assert_eq!(a.batches.len(), 3);
    }

    #[test]
    fn failures_are_counted() {
        let mut t = Tally::default();
        t.check(true, || unreachable!());
        t.check(false, || "first".into());
        t.check(false, || "second".into());
        assert_eq!((t.failures, t.first_failure.as_deref()), (2, Some("first")));
    }
}
