//! The `bigfree` command line. [`run`] returns the exit code and both output
//! streams so it can be driven from tests.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error (bad flags or an
//! argument that does not match its grammar).

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bf_combinatorial::{
    act_triple, circle_dist, from_triple, project, to_triple, top_truncation_point, triple_dist, CirclePoint,
    EdgeRelation, TreeLocation,
};
use crate::cayley::{ball_graph, cayley_act, cayley_dist, embed_compare, offset_grid, unit_grid, CayleyPoint};
use crate::error::Error;
use crate::ordered_abelian::{Alphabet, AlphabetIndex, ZVector};
use crate::sample::{random_related_words, reduced_words};
use crate::suite::{batch_names, run_batches, run_suite, SuiteConfig, DEFAULT_SAMPLES};
use crate::topology::{in_letter_ball, in_metric_ball};
use crate::tree::{check_length_axioms, tree_act, tree_dist, y_point, BigFreeLength, TreePoint};
use crate::words::{common_prefix, gromov, word_dist, Cancellation, Sign, Word};

const WORD: &str = "WORD";
const WORD_HELP: &str = "a word such as \"a1 a2^-3 a1\"; `ι` or \"\" is the identity, `b` the top letter under omega+1";

#[derive(Parser, Debug)]
#[command(name = "bigfree", version, about = "Big free groups, their Z^ω word metric and Λ-tree")]
struct Cli {
    /// Index set of the alphabet.
    #[arg(long, global = true, default_value = "omega", value_name = "omega|omega+1")]
    alphabet: Alphabet,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Freely reduce a word.
    Reduce {
        #[arg(value_name = WORD, help = WORD_HELP)]
        w: String,
    },
    /// Reduced product of two words.
    Mul { w: String, v: String },
    /// Inverse of a word.
    Inv { w: String },
    /// Length vector L(w).
    Len { w: String },
    /// Word distance L(w^-1 v).
    Dist { w: String, v: String },
    /// Gromov product c(w, v) at the identity.
    Gromov { w: String, v: String },
    /// Longest common prefix of two reduced words.
    Prefix { w: String, v: String },
    /// All subwords (initial segments) of a reduced word.
    Subwords { w: String },
    /// Check a cancellation `i-j,k-l,...` (1-based positions) on a word.
    CancelVerify { w: String, pairs: String },
    /// Tree distance between points `<vector> @ <word>`.
    TreeDist { p: String, q: String },
    /// Act on a tree point by a word.
    TreeAct { h: String, p: String },
    /// Median Y(v, x, y) of three words.
    Y { v: String, x: String, y: String },
    /// Check the length-function axioms on a ball of words plus random words.
    AxiomsCheck {
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        #[arg(long, default_value_t = 2)]
        max_index: u32,
        #[arg(long, default_value_t = 20)]
        random: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Canonical triple of a tree point.
    ToTriple { p: String },
    /// Tree point of a triple `(<word> ; a<k>^<±1> ; <vector>)` or a word.
    FromTriple { e: String },
    /// Act on a triple by a word.
    TripleAct { u: String, e: String },
    /// Exact distance between triples, next to the closed form.
    TripleDist { e: String, f: String },
    /// Image of a triple in the wedge of circles.
    Project { e: String },
    /// Distance between circle points `C(a<k>) @ <vector>`.
    CircleDist { x: String, y: String },
    /// Distance in the big Cayley graph; points are words or `(<word> ; a<k>^<±1> ; p/q)`.
    CayleyDist { x: String, y: String },
    /// Act on a Cayley graph point by a word.
    CayleyAct { u: String, x: String },
    /// Where the unit edge w -> w·a meets the Z^ω edge inside [0, L(wa)].
    EmbedCompare {
        w: String,
        /// The edge letter `a<k>`.
        letter: String,
        /// Parameters t = i/grid for i = 0..=grid.
        #[arg(long, default_value_t = 100)]
        grid: i64,
    },
    /// Finite ball of the ordinary Cayley graph, as DOT (default) or JSON.
    Ball {
        center: String,
        #[arg(long, default_value_t = 2)]
        max_len: usize,
        #[arg(long, default_value_t = 2)]
        max_letter: u32,
        #[arg(long, default_value_t = crate::cayley::DEFAULT_VERTEX_CAP)]
        cap: usize,
        /// DOT output (the default unless --json is given).
        #[arg(long)]
        dot: bool,
    },
    /// Is v in B(w, a), i.e. v = wu with every letter of u above a?
    BallLetter { w: String, a: String, v: String },
    /// Is v in B(w, eps), i.e. d(w, v) < eps?
    BallMetric { w: String, eps: String, v: String },
    /// Worked examples.
    Demo {
        which: DemoName,
        #[arg(long, default_value_t = 5)]
        depth: u32,
    },
    /// Run the property suites.
    Suite {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Run only the named batches.
        #[arg(long = "batch")]
        batches: Vec<String>,
        /// List batch names and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum DemoName {
    /// Points ⟨L(b), a_k ⋯ a_1⟩ of the omega+1 tree and their edges.
    OmegaPlusOne,
}

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: 1, msg: e.to_string() }
    }
}

fn usage(what: &str, grammar: &str, e: Error) -> Failure {
    match e {
        Error::Syntax { .. } | Error::ZeroExponent { .. } => {
            Failure { code: 2, msg: format!("cannot parse {what}: {e}\n  {what} grammar: {grammar}") }
        }
        other => other.into(),
    }
}

struct Ctx {
    alphabet: Alphabet,
    json: bool,
}

impl Ctx {
    fn word(&self, text: &str) -> Result<Word, Failure> {
        Word::parse(text, self.alphabet).map_err(|e| usage("word", WORD_HELP, e))
    }

    fn reduced(&self, text: &str) -> Result<Word, Failure> {
        let w = self.word(text)?;
        w.require_reduced()?;
        Ok(w)
    }

    fn vector(&self, text: &str) -> Result<ZVector, Failure> {
        let v = ZVector::parse(text).map_err(|e| usage("vector", "`[c1,c2,...]` with optional `;TOP=c`", e))?;
        self.alphabet.check(&v)?;
        Ok(v)
    }

    fn index(&self, text: &str) -> Result<AlphabetIndex, Failure> {
        let w = self.word(text)?;
        match w.letters() {
            [l] if l.sign == Sign::Pos => Ok(l.index),
            _ => Err(Failure { code: 2, msg: format!("expected a single letter `a<k>`, got `{text}`") }),
        }
    }

    fn point(&self, text: &str) -> Result<TreePoint, Failure> {
        TreePoint::parse(text, self.alphabet).map_err(|e| usage("tree point", "`<vector> @ <word>`", e))
    }

    fn location(&self, text: &str) -> Result<TreeLocation, Failure> {
        TreeLocation::parse(text, self.alphabet)
            .map_err(|e| usage("triple", "a word or `(<word> ; a<k>^<±1> ; <vector>)`", e))
    }

    fn circle(&self, text: &str) -> Result<CirclePoint, Failure> {
        CirclePoint::parse(text, self.alphabet).map_err(|e| usage("circle point", "`C(a<k>) @ <vector>`", e))
    }

    fn cayley(&self, text: &str) -> Result<CayleyPoint, Failure> {
        CayleyPoint::parse(text, self.alphabet)
            .map_err(|e| usage("Cayley point", "a word or `(<word> ; a<k>^<±1> ; p/q)`", e))
    }

    /// `text` as a line, or `{key: text}` under `--json`.
    fn scalar(&self, key: &str, text: impl ToString) -> String {
        if self.json {
            json!({ key: text.to_string() }).to_string()
        } else {
            text.to_string()
        }
    }

    fn emit(&self, text: String, value: Value) -> String {
        if self.json {
            value.to_string()
        } else {
            text
        }
    }
}

fn relation_name(r: EdgeRelation) -> &'static str {
    match r {
        EdgeRelation::SameEdge => "same-edge",
        EdgeRelation::Sibling => "sibling",
        EdgeRelation::Nested => "nested",
        EdgeRelation::Apart => "apart",
    }
}

fn execute(cli: Cli) -> Result<(i32, String), Failure> {
    let ctx = Ctx { alphabet: cli.alphabet, json: cli.json };
    let out = match cli.command {
        Command::Reduce { w } => ctx.scalar("word", ctx.word(&w)?.reduce()),
        Command::Mul { w, v } => ctx.scalar("word", ctx.word(&w)?.multiply(&ctx.word(&v)?)),
        Command::Inv { w } => ctx.scalar("word", ctx.word(&w)?.reduce().inverse()),
        Command::Len { w } => ctx.scalar("length", ctx.word(&w)?.reduce().length()),
        Command::Dist { w, v } => ctx.scalar("distance", word_dist(&ctx.word(&w)?, &ctx.word(&v)?)),
        Command::Gromov { w, v } => ctx.scalar("gromov", gromov(&ctx.word(&w)?, &ctx.word(&v)?)),
        Command::Prefix { w, v } => ctx.scalar("word", common_prefix(&ctx.reduced(&w)?, &ctx.reduced(&v)?)?),
        Command::Subwords { w } => {
            let subs: Vec<String> = ctx.reduced(&w)?.subwords()?.iter().map(Word::to_string).collect();
            ctx.emit(subs.join("\n"), json!({ "subwords": subs }))
        }
        Command::CancelVerify { w, pairs } => {
            let w = ctx.word(&w)?;
            let c = Cancellation::parse(&pairs).map_err(|e| usage("cancellation", "`i-j,k-l,...`", e))?;
            c.verify(&w)?;
            let result = c.apply(&w)?;
            ctx.emit(format!("valid\n{result}"), json!({ "valid": true, "result": result.to_string() }))
        }
        Command::TreeDist { p, q } => ctx.scalar("distance", tree_dist(&ctx.point(&p)?, &ctx.point(&q)?)),
        Command::TreeAct { h, p } => ctx.scalar("point", tree_act(&ctx.word(&h)?, &ctx.point(&p)?)),
        Command::Y { v, x, y } => ctx.scalar("median", y_point(&ctx.word(&v)?, &ctx.word(&x)?, &ctx.word(&y)?)),
        Command::AxiomsCheck { max_len, max_index, random, seed } => {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut sample = reduced_words(max_len, max_index);
            sample.extend(random_related_words(&mut rng, random, 2 * max_len + 2, max_index.max(1)));
            match check_length_axioms(&BigFreeLength, &sample) {
                Ok(r) => ctx.emit(
                    format!("ok: {} elements, {} triples", r.elements, r.triples),
                    json!({ "ok": true, "elements": r.elements, "triples": r.triples }),
                ),
                Err(v) => {
                    let text = ctx.emit(format!("violation: {v}"), json!({ "ok": false, "violation": v.to_string() }));
                    return Ok((1, text));
                }
            }
        }
        Command::ToTriple { p } => ctx.scalar("triple", to_triple(&ctx.point(&p)?)),
        Command::FromTriple { e } => ctx.scalar("point", from_triple(&ctx.location(&e)?)),
        Command::TripleAct { u, e } => ctx.scalar("triple", act_triple(&ctx.reduced(&u)?, &ctx.location(&e)?)),
        Command::TripleDist { e, f } => {
            let d = triple_dist(&ctx.location(&e)?, &ctx.location(&f)?);
            let rel = relation_name(d.relation);
            ctx.emit(
                format!(
                    "exact: {}\nclosed form: {}\nrelation: {rel}\nagrees: {}",
                    d.exact,
                    d.shortcut,
                    d.shortcut_agrees()
                ),
                json!({
                    "exact": d.exact.to_string(),
                    "closed_form": d.shortcut.to_string(),
                    "relation": rel,
                    "agrees": d.shortcut_agrees(),
                }),
            )
        }
        Command::Project { e } => ctx.scalar("circle_point", project(&ctx.location(&e)?)),
        Command::CircleDist { x, y } => ctx.scalar("distance", circle_dist(&ctx.circle(&x)?, &ctx.circle(&y)?)),
        Command::CayleyDist { x, y } => ctx.scalar("distance", cayley_dist(&ctx.cayley(&x)?, &ctx.cayley(&y)?)),
        Command::CayleyAct { u, x } => ctx.scalar("point", cayley_act(&ctx.reduced(&u)?, &ctx.cayley(&x)?)),
        Command::EmbedCompare { w, letter, grid } => {
            if grid < 1 {
                return Err(Failure { code: 2, msg: "--grid must be at least 1".into() });
            }
            let a = ctx.index(&letter)?;
            let report = embed_compare(&ctx.word(&w)?, a, &unit_grid(grid), &offset_grid(a));
            let rows: Vec<String> = report.coincidences.iter().map(|(t, s)| format!("t = {t}  s = {s}")).collect();
            let mut text = rows.join("\n");
            text.push_str(&format!("\nendpoints only: {}", report.only_endpoints(a)));
            let pairs: Vec<Value> =
                report.coincidences.iter().map(|(t, s)| json!({ "t": t.to_string(), "s": s.to_string() })).collect();
            ctx.emit(
                text.trim_start().to_string(),
                json!({ "coincidences": pairs, "endpoints_only": report.only_endpoints(a) }),
            )
        }
        Command::Ball { center, max_len, max_letter, cap, dot } => {
            let g = ball_graph(&ctx.word(&center)?, max_len, max_letter, cap)?;
            if ctx.json && !dot {
                g.to_json()
            } else {
                g.to_dot().trim_end().to_string()
            }
        }
        Command::BallLetter { w, a, v } => {
            let inside = in_letter_ball(&ctx.reduced(&w)?, ctx.index(&a)?, &ctx.reduced(&v)?);
            ctx.emit(inside.to_string(), json!({ "inside": inside }))
        }
        Command::BallMetric { w, eps, v } => {
            let inside = in_metric_ball(&ctx.reduced(&w)?, &ctx.vector(&eps)?, &ctx.reduced(&v)?)?;
            ctx.emit(inside.to_string(), json!({ "inside": inside }))
        }
        Command::Demo { which: DemoName::OmegaPlusOne, depth } => {
            let mut rows = vec![format!("{:>3}  {:<6}  {}", "k", "letter", "point -> triple")];
            let mut values = Vec::new();
            for k in 1..=depth {
                let p = top_truncation_point(k);
                let loc = to_triple(&p);
                let letter = match &loc {
                    TreeLocation::Edge(e) => e.letter().index.to_string(),
                    TreeLocation::Vertex(_) => "-".to_string(),
                };
                rows.push(format!("{k:>3}  {letter:<6}  {p} -> {loc}"));
                values.push(json!({ "k": k, "letter": letter, "point": p.to_string(), "triple": loc.to_string() }));
            }
            ctx.emit(rows.join("\n"), json!({ "rows": values }))
        }
        Command::Suite { seed, samples, batches, list } => {
            if list {
                return Ok((0, batch_names().join("\n")));
            }
            let known = batch_names();
            if let Some(bad) = batches.iter().find(|b| !known.contains(&b.as_str())) {
                return Err(Failure { code: 2, msg: format!("unknown batch `{bad}`; see `suite --list`") });
            }
            let config = SuiteConfig { seed, samples };
            let report = if batches.is_empty() {
                run_suite(config)
            } else {
                let names: Vec<&str> = batches.iter().map(String::as_str).collect();
                run_batches(config, &names)
            };
            let text = if ctx.json {
                serde_json::to_string_pretty(&report).expect("reports serialize")
            } else {
                report.to_string()
            };
            return Ok((if report.passed() { 0 } else { 1 }, text));
        }
    };
    Ok((0, out))
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(cli) {
        Ok((code, mut stdout)) => {
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(f) => Outcome { code: f.code, stdout: String::new(), stderr: format!("error: {}\n", f.msg) },
    }
}
