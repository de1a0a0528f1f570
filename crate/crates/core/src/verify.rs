//! Property suites over enumerated and randomly generated instances, and
//! the random generators they draw from.

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::{
    emery_classify, is_selfdual, sl_component, triple_join, triple_meet, iota, EmeryGen,
    EmeryNode, NamedGroup, NocrTriple, RbPart, SlPart,
};
use crate::decompose::{
    cyclic_group, nb_word_problem, nocr_embedding, rees_example, standard_example, NbElement, Variant,
};
use crate::divide::{divides_with, DivideConfig};
use crate::error::{Error, Result};
use crate::io::{parse_semigroup, SemigroupFile};
use crate::iso::{is_isomorphic, is_isomorphic_ordered};
use crate::matrix::BoolMatrix;
use crate::semigroup::{is_stable_quasiorder, FiniteSemigroup, OrderedSemigroup, StableQuasiorder};
use crate::terms::{parse_relation, parse_term, random_term, OmegaTerm, Shift};
use crate::varieties::{holds, is_member, member_with, rel};

pub const SUITES: [&str; 11] = [
    "trace_kernel",
    "nocr_identities",
    "not_above_sl",
    "emery_oracle",
    "nocr_roundtrip",
    "selfduality",
    "modularity",
    "capB",
    "zero_one",
    "inversion_isotone",
    "nb_word",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub samples: usize,
    pub verdict: Verdict,
    /// Present on failure; [`replay`] reproduces it.
    pub witness: Option<Value>,
    pub seed: u64,
    pub elapsed_ms: u64,
    /// Number of individual comparisons made.
    pub checks: u64,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// `None` uses the suite's default.
    pub samples: Option<usize>,
    pub seed: u64,
    /// Power bound for divisor searches.
    pub bound: usize,
    /// Largest carrier for random samples.
    pub size_cap: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            samples: None,
            seed: 0,
            bound: 2,
            size_cap: 8,
        }
    }
}

fn default_samples(suite: &str) -> usize {
    match suite {
        "trace_kernel" | "nocr_identities" | "inversion_isotone" => 500,
        "not_above_sl" | "nocr_roundtrip" | "selfduality" => 200,
        "zero_one" | "nb_word" => 10_000,
        _ => 1,
    }
}

/// Accumulates the outcome of a suite; the first failure is kept.
#[derive(Default)]
struct Run {
    samples: usize,
    checks: u64,
    witness: Option<Value>,
    inconclusive: u64,
    notes: Vec<String>,
}

impl Run {
    fn check(&mut self, ok: bool, witness: impl FnOnce() -> Value) -> bool {
        self.checks += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
        ok
    }

    fn failed(&self) -> bool {
        self.witness.is_some()
    }
}

pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<SuiteReport> {
    if !SUITES.contains(&name) {
        return Err(Error::UnknownSuite(name.to_string()));
    }
    let start = Instant::now();
    let samples = config.samples.unwrap_or_else(|| default_samples(name));
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut run = Run::default();
    match name {
        "trace_kernel" => trace_kernel(&mut run, &mut rng, samples, config),
        "nocr_identities" => nocr_identities(&mut run, &mut rng, samples, config),
        "not_above_sl" => not_above_sl(&mut run, &mut rng, samples, config),
        "emery_oracle" => emery_oracle(&mut run, config),
        "nocr_roundtrip" => nocr_roundtrip(&mut run, &mut rng, samples, config),
        "selfduality" => selfduality(&mut run, &mut rng, samples, config),
        "modularity" => modularity(&mut run, config)?,
        "capB" => cap_b(&mut run, config)?,
        "zero_one" => zero_one(&mut run, &mut rng, samples),
        "inversion_isotone" => inversion_isotone(&mut run, &mut rng, samples, config),
        "nb_word" => nb_word(&mut run, &mut rng, samples),
        _ => unreachable!(),
    }
    let verdict = if run.failed() {
        Verdict::Fail
    } else if run.inconclusive > 0 {
        run.notes.push(format!("{} checks were cut off by a bound", run.inconclusive));
        Verdict::Inconclusive
    } else {
        Verdict::Pass
    };
    Ok(SuiteReport {
        suite: name.to_string(),
        samples: run.samples,
        verdict,
        witness: run.witness,
        seed: config.seed,
        elapsed_ms: start.elapsed().as_millis() as u64,
        checks: run.checks,
        notes: run.notes,
    })
}

// ---------------------------------------------------------------------------
// random generators

/// `M[G; I, Λ; P]` with `P` chosen at random; element `(i, g, l)` has
/// index `(i * |G| + g) * |Λ| + l`.
fn random_rees<R: Rng + ?Sized>(rng: &mut R, group: &FiniteSemigroup, rows: usize, cols: usize) -> FiniteSemigroup {
    let g = group.size();
    let p: Vec<Vec<usize>> = (0..cols)
        .map(|_| (0..rows).map(|_| rng.gen_range(0..g)).collect())
        .collect();
    let n = rows * g * cols;
    let decode = |x: usize| (x / (g * cols), (x / cols) % g, x % cols);
    let table = (0..n)
        .map(|a| {
            let (i, x, l) = decode(a);
            (0..n)
                .map(|b| {
                    let (j, y, m) = decode(b);
                    let z = group.mul(group.mul(x, p[l][j]), y);
                    (i * g + z) * cols + m
                })
                .collect()
        })
        .collect();
    FiniteSemigroup::new(table, None).expect("Rees matrix semigroups are associative")
}

/// `S` with a new identity (`zero = false`) or a new zero.
fn adjoin_element(s: &FiniteSemigroup, zero: bool) -> FiniteSemigroup {
    let n = s.size();
    let table = (0..=n)
        .map(|a| {
            (0..=n)
                .map(|b| match (a == n, b == n) {
                    (false, false) => s.mul(a, b),
                    (true, true) => n,
                    (true, false) => {
                        if zero {
                            n
                        } else {
                            b
                        }
                    }
                    (false, true) => {
                        if zero {
                            n
                        } else {
                            a
                        }
                    }
                })
                .collect()
        })
        .collect();
    FiniteSemigroup::new(table, None).expect("adjoining keeps associativity")
}

fn nocr_blocks() -> &'static [OrderedSemigroup] {
    static BLOCKS: OnceLock<Vec<OrderedSemigroup>> = OnceLock::new();
    BLOCKS.get_or_init(|| {
        let mut v: Vec<OrderedSemigroup> = [
            "trivial", "U+", "U-", "L", "R", "L<", "R<", "C2", "C3", "C4", "S3", "C2xC2", "Gtop:2", "Gbot:2",
            "Gzero:2", "Gtop:3", "Gbot:3", "Gzero:3", "FB2",
        ]
        .iter()
        .map(|n| standard_example(n).expect("standard example"))
        .collect();
        v.push(standard_example("U+").unwrap().forget_order().with_name("Sl2"));
        v.push(standard_example("L").unwrap().product(&standard_example("R").unwrap()));
        v
    })
}

fn random_cr_block<R: Rng + ?Sized>(rng: &mut R, cap: usize) -> OrderedSemigroup {
    loop {
        let groups = [cyclic_group(1), cyclic_group(2), cyclic_group(3)];
        let g = groups.choose(rng).unwrap().sgp().clone();
        let rows = rng.gen_range(1..=3);
        let cols = rng.gen_range(1..=3);
        if rows * g.size() * cols + 1 > cap {
            continue;
        }
        let cs = random_rees(rng, &g, rows, cols);
        let s = match rng.gen_range(0..3) {
            0 => cs,
            1 => adjoin_element(&cs, true),
            _ => adjoin_element(&cs, false),
        };
        return OrderedSemigroup::unordered(s);
    }
}

fn pick_block<R: Rng + ?Sized>(rng: &mut R, cap: usize, allow_cr: bool) -> OrderedSemigroup {
    if allow_cr && rng.gen_bool(0.3) {
        if cap >= 8 && rng.gen_bool(0.2) {
            return rees_example();
        }
        return random_cr_block(rng, cap.max(2));
    }
    let fitting: Vec<&OrderedSemigroup> = nocr_blocks().iter().filter(|b| b.size() <= cap).collect();
    (*fitting.choose(rng).expect("the trivial block always fits")).clone()
}

/// Adds a random pair to the order and closes it; kept only when the
/// closure is still antisymmetric.
fn perturb_order<R: Rng + ?Sized>(rng: &mut R, a: OrderedSemigroup) -> OrderedSemigroup {
    let n = a.size();
    if n < 2 {
        return a;
    }
    let mut pairs: Vec<(usize, usize)> = a.order().pairs().collect();
    pairs.push((rng.gen_range(0..n), rng.gen_range(0..n)));
    let q = StableQuasiorder::generated_by(a.sgp(), &pairs);
    if q.matrix().antisymmetry_violation().is_some() {
        return a;
    }
    OrderedSemigroup::from_order_matrix(a.sgp().clone(), q.matrix().clone()).unwrap_or(a)
}

fn random_sample<R: Rng + ?Sized>(rng: &mut R, cap: usize, allow_cr: bool) -> OrderedSemigroup {
    let mut a = pick_block(rng, cap, allow_cr);
    if rng.gen_bool(0.6) {
        let b = pick_block(rng, cap, allow_cr);
        if a.size() * b.size() <= cap {
            a = a.product(&b);
        }
    }
    if a.size() > 1 && rng.gen_bool(0.5) {
        let k = rng.gen_range(1..=3);
        let seed: Vec<usize> = (0..k).map(|_| rng.gen_range(0..a.size())).collect();
        a = a.subsemigroup(&seed).expect("seed in range").0;
    }
    if rng.gen_bool(0.4) {
        a = perturb_order(rng, a);
    }
    a.with_name("sample")
}

/// A random completely regular ordered semigroup with at most `size_cap`
/// elements, built from standard blocks and random Rees matrix semigroups
/// by products, subsemigroups and order extensions.
pub fn random_cr(size_cap: usize, seed: u64) -> OrderedSemigroup {
    random_sample(&mut ChaCha8Rng::seed_from_u64(seed), size_cap.clamp(1, 64), true)
}

/// Like [`random_cr`] but from normal orthogroup blocks only.
pub fn random_nocr(size_cap: usize, seed: u64) -> OrderedSemigroup {
    random_sample(&mut ChaCha8Rng::seed_from_u64(seed), size_cap.clamp(1, 64), false)
}

/// The semigroup generated by transformations of `0..n`, composed left to
/// right; `None` when it exceeds `cap`.
pub fn transformation_semigroup(gens: &[Vec<usize>], cap: usize) -> Option<FiniteSemigroup> {
    let compose = |a: &[usize], b: &[usize]| -> Vec<usize> { a.iter().map(|&i| b[i]).collect() };
    let mut elements: Vec<Vec<usize>> = Vec::new();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    for g in gens {
        if !index.contains_key(g) {
            index.insert(g.clone(), elements.len());
            elements.push(g.clone());
        }
    }
    let mut i = 0;
    while i < elements.len() {
        for g in gens {
            let p = compose(&elements[i], g);
            if !index.contains_key(&p) {
                if elements.len() == cap {
                    return None;
                }
                index.insert(p.clone(), elements.len());
                elements.push(p);
            }
        }
        i += 1;
    }
    let table = elements
        .iter()
        .map(|a| elements.iter().map(|b| index[&compose(a, b)]).collect())
        .collect();
    Some(FiniteSemigroup::new(table, None).expect("composition is associative"))
}

fn random_finite_semigroup<R: Rng + ?Sized>(rng: &mut R) -> FiniteSemigroup {
    loop {
        let n = rng.gen_range(2..=5);
        let k = rng.gen_range(1..=3);
        let gens: Vec<Vec<usize>> = (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..n)).collect()).collect();
        if let Some(s) = transformation_semigroup(&gens, 128) {
            return s;
        }
    }
}

// ---------------------------------------------------------------------------
// exhaustive enumeration of small normal bands

fn bands_of_size(n: usize) -> Vec<FiniteSemigroup> {
    fn consistent(t: &[Option<usize>], n: usize) -> bool {
        for a in 0..n {
            for b in 0..n {
                let Some(ab) = t[a * n + b] else { continue };
                for c in 0..n {
                    let Some(bc) = t[b * n + c] else { continue };
                    if let (Some(l), Some(r)) = (t[ab * n + c], t[a * n + bc]) {
                        if l != r {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
    fn fill(t: &mut Vec<Option<usize>>, n: usize, cell: usize, out: &mut Vec<FiniteSemigroup>) {
        if cell == n * n {
            let rows = (0..n).map(|a| (0..n).map(|b| t[a * n + b].unwrap()).collect()).collect();
            out.push(FiniteSemigroup::new(rows, None).expect("checked associative"));
            return;
        }
        if t[cell].is_some() {
            return fill(t, n, cell + 1, out);
        }
        for v in 0..n {
            t[cell] = Some(v);
            if consistent(t, n) {
                fill(t, n, cell + 1, out);
            }
        }
        t[cell] = None;
    }
    let mut t = vec![None; n * n];
    for a in 0..n {
        t[a * n + a] = Some(a);
    }
    let mut all = Vec::new();
    fill(&mut t, n, 0, &mut all);
    let mut reps: Vec<FiniteSemigroup> = Vec::new();
    for s in all {
        if !reps.iter().any(|r| is_isomorphic(r, &s)) {
            reps.push(s);
        }
    }
    reps
}

/// All normal bands with at most `max` elements (at most 4), one per
/// isomorphism class.
pub fn normal_bands(max: usize) -> Vec<FiniteSemigroup> {
    static CACHE: OnceLock<Vec<FiniteSemigroup>> = OnceLock::new();
    assert!(max <= 4, "band enumeration stops at four elements");
    CACHE
        .get_or_init(|| {
            (1..=4)
                .flat_map(bands_of_size)
                .filter(|s| is_member(&OrderedSemigroup::unordered(s.clone()), "NB"))
                .collect()
        })
        .iter()
        .filter(|s| s.size() <= max)
        .cloned()
        .collect()
}

/// All stably ordered normal bands with at most `max` elements (at most
/// 4), one per isomorphism class of ordered semigroups.
pub fn ordered_normal_bands(max: usize) -> Vec<OrderedSemigroup> {
    static CACHE: OnceLock<Vec<OrderedSemigroup>> = OnceLock::new();
    assert!(max <= 4, "band enumeration stops at four elements");
    CACHE
        .get_or_init(|| {
            let mut out = Vec::new();
            for s in normal_bands(4) {
                let n = s.size();
                let off: Vec<(usize, usize)> =
                    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|(i, j)| i != j).collect();
                let mut found: Vec<OrderedSemigroup> = Vec::new();
                for mask in 0u32..(1 << off.len()) {
                    let mut m = BoolMatrix::identity(n);
                    for (k, &(i, j)) in off.iter().enumerate() {
                        if mask >> k & 1 == 1 {
                            m.set(i, j, true);
                        }
                    }
                    if !m.is_transitive() || m.antisymmetry_violation().is_some() || !is_stable_quasiorder(&s, &m) {
                        continue;
                    }
                    let a = OrderedSemigroup::from_order_matrix(s.clone(), m).expect("checked partial order");
                    if !found.iter().any(|b| is_isomorphic_ordered(b, &a)) {
                        found.push(a);
                    }
                }
                out.extend(found);
            }
            out
        })
        .iter()
        .filter(|a| a.size() <= max)
        .cloned()
        .collect()
}

// ---------------------------------------------------------------------------
// helpers shared by suites

fn file_value(a: &OrderedSemigroup) -> Value {
    serde_json::to_value(SemigroupFile::from_ordered(a)).expect("serializable")
}

fn config_for(config: &SuiteConfig) -> DivideConfig {
    DivideConfig::new(config.bound)
}

enum Found {
    Yes,
    No,
    Budget,
}

fn search(t: &OrderedSemigroup, s: &OrderedSemigroup, config: &DivideConfig) -> Found {
    match divides_with(t, s, config) {
        Ok(Some(_)) => Found::Yes,
        Ok(None) => Found::No,
        Err(_) => Found::Budget,
    }
}

/// The product of `gens`, or the trivial semigroup.
pub fn product_of(gens: &[OrderedSemigroup]) -> OrderedSemigroup {
    gens.iter()
        .cloned()
        .reduce(|a, b| a.product(&b))
        .unwrap_or_else(OrderedSemigroup::trivial)
}

/// Representative of a node: the product of its generators.
pub fn node_representative(node: EmeryNode) -> OrderedSemigroup {
    product_of(&node.gens().into_iter().map(EmeryGen::example).collect::<Vec<_>>())
}

// ---------------------------------------------------------------------------
// trace_kernel

/// The five conditions for `s`, `t` (assumed J-equivalent) under `rho`.
pub fn trace_kernel_conditions(s_gp: &FiniteSemigroup, rho: &BoolMatrix, s: usize, t: usize) -> [bool; 5] {
    let w = |a: usize| s_gp.omega(a);
    let inv = |a: usize| s_gp.cr_inverse(a).expect("completely regular");
    let m = |a: usize, b: usize| s_gp.mul(a, b);
    let r = |a: usize, b: usize| rho.get(a, b);
    let base = r(w(s), w(t));
    let kernel = |u: usize| r(u, w(u));
    [
        r(s, t),
        base && kernel(m(s, inv(t))),
        base && kernel(m(inv(t), s)),
        base && kernel(m(inv(s), t)),
        base && kernel(m(t, inv(s))),
    ]
}

fn trace_kernel(run: &mut Run, rng: &mut ChaCha8Rng, samples: usize, config: &SuiteConfig) {
    for _ in 0..samples {
        let a = random_sample(rng, config.size_cap, true);
        let s_gp = a.sgp();
        let n = a.size();
        let green = s_gp.green();
        run.samples += 1;
        for q in 0..3 {
            let pairs: Vec<(usize, usize)> = (0..q + rng.gen_range(0..2))
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
                .collect();
            let rho = StableQuasiorder::generated_by(s_gp, &pairs).matrix().clone();
            for s in 0..n {
                for t in 0..n {
                    if !green.j_equiv(s, t) {
                        continue;
                    }
                    let c = trace_kernel_conditions(s_gp, &rho, s, t);
                    let ok = run.check(c.iter().all(|&b| b == c[0]), || {
                        json!({
                            "kind": "trace_kernel",
                            "semigroup": file_value(&a),
                            "quasiorder": rho.pairs().map(|(i, j)| [i, j]).collect::<Vec<_>>(),
                            "s": s, "t": t, "conditions": c,
                        })
                    });
                    if !ok {
                        return;
                    }
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// nocr_identities

pub const NOCR_IDENTITIES: [&str; 2] = ["(x y)^w = x^w y^w", "x^w y x^w z x^w = x^w y z x^w"];

fn relation_witness(a: &OrderedSemigroup, relation: &str, expect: bool) -> Value {
    json!({"kind": "relation", "semigroup": file_value(a), "relation": relation, "expect": expect})
}

fn nocr_identities(run: &mut Run, rng: &mut ChaCha8Rng, samples: usize, config: &SuiteConfig) {
    for _ in 0..samples {
        let a = random_sample(rng, config.size_cap, false);
        run.samples += 1;
        for text in NOCR_IDENTITIES {
            if !run.check(holds(&a, &rel(text)), || relation_witness(&a, text, true)) {
                return;
            }
        }
    }
    let rees = rees_example();
    let non_member = !is_member(&rees, "NOCR") && rees.sgp().is_completely_regular();
    run.check(non_member && !holds(&rees, &rel(NOCR_IDENTITIES[0])), || {
        relation_witness(&rees, NOCR_IDENTITIES[0], false)
    });
}

// ---------------------------------------------------------------------------
// not_above_sl

/// Holds in completely simple semigroups and fails in U+ and U-.
const SEPARATES_SL: &str = "(x^w y^w x^w)^w = x^w";

fn not_above_sl(run: &mut Run, rng: &mut ChaCha8Rng, samples: usize, config: &SuiteConfig) {
    let div = config_for(config);
    for _ in 0..samples {
        let a = random_sample(rng, config.size_cap, true);
        run.samples += 1;
        let sl = sl_component(&a).expect("samples are completely regular");
        if sl != SlPart::SlFull {
            let m = member_with(&a, "NOCR", true).expect("catalog basis");
            let failing = m.failure.as_ref().map(|(r, _)| r.to_string()).unwrap_or_default();
            if !run.check(m.holds, || relation_witness(&a, &failing, true)) {
                return;
            }
            continue;
        }
        for g in [EmeryGen::UPlus, EmeryGen::UMinus] {
            match search(&g.example(), &a, &div) {
                Found::Yes => run.checks += 1,
                _ if holds(&a, &rel(SEPARATES_SL)) => {
                    run.check(false, || {
                        json!({
                            "kind": "separating_relation",
                            "semigroup": file_value(&a),
                            "relation": SEPARATES_SL,
                            "absent": g.name(),
                        })
                    });
                    run.notes.push(format!(
                        "both semilattice inequalities fail but {} is not in the generated pseudovariety",
                        g.name()
                    ));
                    return;
                }
                _ => run.inconclusive += 1,
            }
        }
    }
}

// ---------------------------------------------------------------------------
// emery_oracle

fn emery_oracle(run: &mut Run, config: &SuiteConfig) {
    let div = DivideConfig::new(config.bound.max(2));
    for bits in 0..16u8 {
        let node = EmeryNode::from_bits(bits);
        let rep = node_representative(node);
        run.samples += 1;
        let got = emery_classify(&rep).expect("products of generators are normal bands");
        if !run.check(got == node, || json!({"kind": "emery", "bits": bits, "classified": got.bits()})) {
            return;
        }
        for g in EmeryGen::ALL {
            let found = match search(&g.example(), &rep, &div) {
                Found::Yes => true,
                Found::No => false,
                Found::Budget => {
                    run.inconclusive += 1;
                    continue;
                }
            };
            let ok = run.check(found == node.contains(g), || {
                json!({"kind": "emery_oracle", "bits": bits, "generator": g.name(), "bound": div.power_bound})
            });
            if !ok {
                return;
            }
        }
    }
    let bands = ordered_normal_bands(4);
    let mut nodes = BTreeSet::new();
    for a in &bands {
        run.samples += 1;
        run.checks += 1;
        nodes.insert(emery_classify(a).expect("enumerated bands are normal"));
    }
    run.notes.push(format!("{} ordered normal bands up to size 4 reach {} nodes", bands.len(), nodes.len()));
    run.check(nodes.len() == 16, || json!({"kind": "emery_nodes", "reached": nodes.len()}));
}

// ---------------------------------------------------------------------------
// nocr_roundtrip

fn nocr_plus_sample<R: Rng + ?Sized>(rng: &mut R, cap: usize) -> OrderedSemigroup {
    loop {
        let a = random_sample(rng, cap, false);
        if holds(&a, &rel("x^w <= x^w y^w x^w")) {
            return a;
        }
    }
}

/// Whether the two lists generate the same pseudovariety of groups, by
/// division into bounded powers of products.
fn groups_equivalent(x: &[NamedGroup], y: &[NamedGroup], div: &DivideConfig) -> Option<bool> {
    let px = product_of(&x.iter().map(|g| g.group.clone()).collect::<Vec<_>>());
    let py = product_of(&y.iter().map(|g| g.group.clone()).collect::<Vec<_>>());
    for (list, p) in [(x, &py), (y, &px)] {
        for g in list {
            match search(&g.group, p, div) {
                Found::Yes => {}
                Found::No => return Some(false),
                Found::Budget => return None,
            }
        }
    }
    Some(true)
}

fn roundtrip_witness(a: &OrderedSemigroup, what: &str) -> Value {
    json!({"kind": "roundtrip", "semigroup": file_value(a), "check": what})
}

/// The certificate checks for one sample; `None` when they pass.
pub fn roundtrip_failure(a: &OrderedSemigroup) -> Option<&'static str> {
    let cert = match nocr_embedding(a, Variant::Top) {
        Ok(c) => c,
        Err(_) => return Some("embedding"),
    };
    if !cert.validation.is_valid() || !cert.validate().is_valid() {
        return Some("certificate");
    }
    let factors: Vec<OrderedSemigroup> = cert.factors.iter().map(|f| f.semigroup.clone()).collect();
    let lhs = iota(&factors).ok()?;
    let rhs = iota(&[a.clone(), EmeryGen::UPlus.example()]).ok()?;
    (lhs != rhs).then_some("iota")
}

fn nocr_roundtrip(run: &mut Run, rng: &mut ChaCha8Rng, samples: usize, config: &SuiteConfig) {
    let div = config_for(config);
    let nb = NocrTriple {
        sl: SlPart::SlFull,
        rb: RbPart { lz: true, rz: true },
        groups: Vec::new(),
    };
    let mut previous: Option<NocrTriple> = None;
    for _ in 0..samples {
        let a = nocr_plus_sample(rng, config.size_cap);
        run.samples += 1;
        let failure = roundtrip_failure(&a);
        if !run.check(failure.is_none(), || roundtrip_witness(&a, failure.unwrap_or(""))) {
            return;
        }
        let t = iota(std::slice::from_ref(&a)).expect("sample is a normal orthogroup");
        if let Some(p) = previous.replace(t.clone()) {
            let v = NocrTriple {
                groups: Vec::new(),
                ..p
            };
            let h = NocrTriple {
                sl: SlPart::Trivial,
                rb: RbPart::default(),
                groups: t.groups.clone(),
            };
            let vh = triple_join(&v, &h);
            let back_v = triple_meet(&vh, &nb, config.bound);
            if !run.check(back_v.sl == v.sl && back_v.rb == v.rb && back_v.groups.is_empty(), || {
                roundtrip_witness(&a, "band part")
            }) {
                return;
            }
            let mut big = h.groups.clone();
            big.push(NamedGroup::new(standard_example("S3").unwrap()));
            let g = NocrTriple {
                sl: SlPart::Trivial,
                rb: RbPart::default(),
                groups: big,
            };
            let back_h = triple_meet(&vh, &g, config.bound);
            match groups_equivalent(&back_h.groups, &h.groups, &div) {
                Some(ok) => {
                    let fine = ok && back_h.sl == SlPart::Trivial && back_h.rb == RbPart::default();
                    if !run.check(fine, || roundtrip_witness(&a, "group part")) {
                        return;
                    }
                }
                None => run.inconclusive += 1,
            }
        }
    }
}

// ---------------------------------------------------------------------------
// selfduality

/// U+, U-, L, R, L<, C2, C3, the adjoined-group examples over C2 and C3,
/// and all products of two distinct members.
pub fn selfduality_corpus() -> Vec<OrderedSemigroup> {
    let base: Vec<OrderedSemigroup> = [
        "U+", "U-", "L", "R", "L<", "C2", "C3", "Gtop:2", "Gbot:2", "Gzero:2", "Gtop:3", "Gbot:3", "Gzero:3",
    ]
    .iter()
    .map(|n| standard_example(n).expect("standard example"))
    .collect();
    let mut out = base.clone();
    for i in 0..base.len() {
        for j in i + 1..base.len() {
            out.push(base[i].product(&base[j]));
        }
    }
    out
}

/// Checks one generator; counts cut-off searches in `run.inconclusive`.
fn selfduality_check(run: &mut Run, a: &OrderedSemigroup, div: &DivideConfig) -> bool {
    let sd = is_selfdual(std::slice::from_ref(a)).expect("completely regular");
    let sd_dual = is_selfdual(&[a.dual()]).expect("completely regular");
    if !run.check(sd == sd_dual, || json!({"kind": "selfdual", "semigroup": file_value(a)})) {
        return false;
    }
    let sl = sl_component(a).expect("completely regular");
    let orthodox = is_member(a, "NOCR");
    for (g, claimed) in [(EmeryGen::UPlus, sl.has_u_plus()), (EmeryGen::UMinus, sl.has_u_minus())] {
        match search(&g.example(), a, div) {
            Found::Yes => {
                let ok = run.check(claimed, || {
                    json!({"kind": "selfdual_oracle", "semigroup": file_value(a), "generator": g.name()})
                });
                if !ok {
                    return false;
                }
            }
            _ if claimed && orthodox => run.inconclusive += 1,
            _ => run.checks += 1,
        }
    }
    if sl == SlPart::SlFull {
        match search(&a.dual(), a, div) {
            Found::Yes => run.checks += 1,
            _ => run.inconclusive += 1,
        }
    }
    true
}

fn selfduality(run: &mut Run, rng: &mut ChaCha8Rng, samples: usize, config: &SuiteConfig) {
    let div = config_for(config);
    for a in selfduality_corpus() {
        run.samples += 1;
        if !selfduality_check(run, &a, &div) {
            return;
        }
    }
    for _ in 0..samples {
        let a = random_sample(rng, config.size_cap, false);
        run.samples += 1;
        if !selfduality_check(run, &a, &div) {
            return;
        }
    }
}

// ---------------------------------------------------------------------------
// finite triple lattice

pub const GROUP_UNIVERSE: [&str; 5] = ["trivial", "C2", "C3", "C2xC2", "S3"];

/// The pseudovarieties of groups generated by subsets of
/// [`GROUP_UNIVERSE`], each recorded by which universe groups it contains.
pub struct GroupLattice {
    /// Bitmask over the universe for each element.
    pub traces: Vec<u8>,
    /// A generating subset of the universe for each element.
    pub reps: Vec<u8>,
    pub join: Vec<Vec<usize>>,
    pub meet: Vec<Vec<usize>>,
}

fn universe() -> Vec<OrderedSemigroup> {
    GROUP_UNIVERSE.iter().map(|n| standard_example(n).expect("standard group")).collect()
}

fn subset(mask: u8, groups: &[OrderedSemigroup]) -> Vec<OrderedSemigroup> {
    (0..groups.len()).filter(|&i| mask >> i & 1 == 1).map(|i| groups[i].clone()).collect()
}

/// Universe groups dividing a power of the product of `gens`; the power
/// is capped so that it stays below 4096 elements.
fn trace_of(gens: &[OrderedSemigroup], bound: usize) -> Result<u8> {
    let p = product_of(gens);
    let mut power = 1;
    while power < bound && p.size().pow(power as u32 + 1) <= 4096 {
        power += 1;
    }
    let div = DivideConfig::new(power);
    let mut trace = 0;
    for (i, u) in universe().iter().enumerate() {
        if divides_with(u, &p, &div)?.is_some() {
            trace |= 1 << i;
        }
    }
    Ok(trace)
}

impl GroupLattice {
    pub fn build(bound: usize) -> Result<Self> {
        let groups = universe();
        let mut traces: Vec<u8> = Vec::new();
        let mut reps: Vec<u8> = Vec::new();
        let mut of_mask = [0u8; 32];
        for mask in 0u8..32 {
            let t = trace_of(&subset(mask, &groups), bound)?;
            of_mask[mask as usize] = t;
            if !traces.contains(&t) {
                traces.push(t);
                reps.push(mask);
            }
        }
        let k = traces.len();
        let find = |t: u8| traces.iter().position(|&x| x == t);
        let mut join = vec![vec![0; k]; k];
        let mut meet = vec![vec![0; k]; k];
        for i in 0..k {
            for j in 0..k {
                join[i][j] = find(of_mask[(reps[i] | reps[j]) as usize]).expect("subset traces are listed");
                let side = |m: u8| NocrTriple {
                    sl: SlPart::Trivial,
                    rb: RbPart::default(),
                    groups: subset(m, &groups).into_iter().map(NamedGroup::new).collect(),
                };
                let m = triple_meet(&side(reps[i]), &side(reps[j]), bound.max(2));
                let gens: Vec<OrderedSemigroup> = m.groups.into_iter().map(|g| g.group).collect();
                let t = trace_of(&gens, bound)?;
                meet[i][j] = find(t).ok_or_else(|| Error::HypothesisFailed {
                    relation: format!("meet trace {t:#07b} is not generated by universe groups"),
                })?;
            }
        }
        Ok(GroupLattice {
            traces,
            reps,
            join,
            meet,
        })
    }

    pub fn len(&self) -> usize {
        self.traces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.traces.is_empty()
    }

    /// The element containing only the trivial group.
    pub fn bottom(&self) -> usize {
        self.traces.iter().position(|&t| t == 1).expect("the trivial pseudovariety is listed")
    }
}

/// A point of the finite triple lattice: semilattice part, rectangular
/// band part and an index into a [`GroupLattice`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TriplePoint {
    pub sl: SlPart,
    pub rb: RbPart,
    pub group: usize,
}

pub struct TripleLattice {
    pub groups: GroupLattice,
    pub points: Vec<TriplePoint>,
}

impl TripleLattice {
    pub fn build(bound: usize) -> Result<Self> {
        let groups = GroupLattice::build(bound)?;
        let mut points = Vec::new();
        for sl in SlPart::ALL {
            for rb in RbPart::ALL {
                for group in 0..groups.len() {
                    points.push(TriplePoint { sl, rb, group });
                }
            }
        }
        Ok(TripleLattice { groups, points })
    }

    pub fn join(&self, a: TriplePoint, b: TriplePoint) -> TriplePoint {
        TriplePoint {
            sl: a.sl.join(b.sl),
            rb: a.rb.join(b.rb),
            group: self.groups.join[a.group][b.group],
        }
    }

    pub fn meet(&self, a: TriplePoint, b: TriplePoint) -> TriplePoint {
        TriplePoint {
            sl: a.sl.meet(b.sl),
            rb: a.rb.meet(b.rb),
            group: self.groups.meet[a.group][b.group],
        }
    }

    pub fn leq(&self, a: TriplePoint, b: TriplePoint) -> bool {
        self.join(a, b) == b
    }

    fn describe(&self, p: TriplePoint) -> Value {
        let names: Vec<&str> = (0..5)
            .filter(|&i| self.groups.traces[p.group] >> i & 1 == 1)
            .map(|i| GROUP_UNIVERSE[i])
            .collect();
        json!({"sl": p.sl.name(), "rb": p.rb.names(), "groups": names})
    }
}

/// A pentagon `a < c`, `b` with equal joins and meets against `b`, if any,
/// and the number of triples examined.
pub fn find_pentagon(l: &TripleLattice) -> (Option<[TriplePoint; 3]>, u64) {
    let mut checked = 0;
    for &a in &l.points {
        for &c in &l.points {
            if a == c || !l.leq(a, c) {
                continue;
            }
            for &b in &l.points {
                checked += 1;
                if l.join(a, b) == l.join(c, b) && l.meet(a, b) == l.meet(c, b) {
                    return (Some([a, b, c]), checked);
                }
            }
        }
    }
    (None, checked)
}

/// The order on the sixteen nodes read off satisfaction: `n <= m` when the
/// representative of `n` satisfies the relation of `m`.
pub fn emery_order_matrix() -> Vec<Vec<bool>> {
    let nodes = EmeryNode::all();
    nodes
        .iter()
        .map(|&n| {
            let rep = node_representative(n);
            nodes.iter().map(|m| holds(&rep, &rel(m.relation()))).collect()
        })
        .collect()
}

/// Whether the order is a distributive lattice; joins and meets are taken
/// as least upper and greatest lower bounds.
pub fn is_distributive_lattice(leq: &[Vec<bool>]) -> bool {
    let n = leq.len();
    let bound = |a: usize, b: usize, upper: bool| -> Option<usize> {
        let cands: Vec<usize> = (0..n)
            .filter(|&c| if upper { leq[a][c] && leq[b][c] } else { leq[c][a] && leq[c][b] })
            .collect();
        cands
            .iter()
            .copied()
            .find(|&c| cands.iter().all(|&d| if upper { leq[c][d] } else { leq[d][c] }))
    };
    let mut join = vec![vec![0; n]; n];
    let mut meet = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            match (bound(a, b, true), bound(a, b, false)) {
                (Some(j), Some(m)) => {
                    join[a][b] = j;
                    meet[a][b] = m;
                }
                _ => return false,
            }
        }
    }
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| meet[a][join[b][c]] == join[meet[a][b]][meet[a][c]])))
}

fn modularity(run: &mut Run, config: &SuiteConfig) -> Result<()> {
    let l = TripleLattice::build(config.bound)?;
    run.samples = l.points.len();
    run.notes.push(format!(
        "{} group pseudovarieties over the universe, {} triples",
        l.groups.len(),
        l.points.len()
    ));
    let (pentagon, checked) = find_pentagon(&l);
    run.checks += checked - 1;
    run.check(pentagon.is_none(), || {
        let [a, b, c] = pentagon.unwrap();
        json!({"kind": "pentagon", "a": l.describe(a), "b": l.describe(b), "c": l.describe(c)})
    });
    let leq = emery_order_matrix();
    let boolean = (0..16).all(|i| {
        (0..16).all(|j| leq[i][j] == EmeryNode::all()[i].leq(EmeryNode::all()[j]))
    });
    run.check(boolean && is_distributive_lattice(&leq), || json!({"kind": "emery_distributive"}));
    Ok(())
}

fn cap_b(run: &mut Run, config: &SuiteConfig) -> Result<()> {
    let l = TripleLattice::build(config.bound)?;
    let b = TriplePoint {
        sl: SlPart::SlFull,
        rb: RbPart { lz: true, rz: true },
        group: l.groups.bottom(),
    };
    run.samples = l.points.len() * l.points.len();
    for &x in &l.points {
        for &y in &l.points {
            let lhs = l.meet(l.join(x, y), b);
            let rhs = l.join(l.meet(x, b), l.meet(y, b));
            if !run.check(lhs == rhs, || json!({"kind": "capB", "a": l.describe(x), "b": l.describe(y)})) {
                return Ok(());
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// zero_one

/// Content and evaluation checks for both splits of `t` in `s`; the first
/// failing check is named.
pub fn zero_one_failure(t: &OmegaTerm, s: &FiniteSemigroup, assignment: &[usize]) -> Option<&'static str> {
    let c = t.content();
    let value = t.compile().eval(s, assignment);
    for (name, split, side) in [("zero", t.zero_split(), true), ("one", t.one_split(), false)] {
        let rest = if side { &split.prefix } else { &split.suffix };
        let rest_content = rest.as_ref().map(OmegaTerm::content).unwrap_or_default();
        if rest_content.contains(&split.marker) {
            return Some(if side { "zero: marker inside prefix" } else { "one: marker inside suffix" });
        }
        let mut all = rest_content;
        all.insert(split.marker);
        if all != c {
            return Some(if side { "zero: content" } else { "one: content" });
        }
        if split.rebuild().compile().eval(s, assignment) != value {
            return Some(if name == "zero" { "zero: value" } else { "one: value" });
        }
    }
    None
}

fn zero_one(run: &mut Run, rng: &mut ChaCha8Rng, samples: usize) {
    let semigroups = 20.max(samples.div_ceil(500));
    let per = samples.div_ceil(semigroups);
    for _ in 0..semigroups {
        let s = random_finite_semigroup(rng);
        for _ in 0..per {
            let letters = rng.gen_range(1..=4);
            let depth = rng.gen_range(1..=4);
            let t = random_term(rng, letters, depth);
            run.samples += 1;
            for _ in 0..3 {
                let assignment: Vec<usize> = (0..letters).map(|_| rng.gen_range(0..s.size())).collect();
                let failure = zero_one_failure(&t, &s, &assignment);
                let ok = run.check(failure.is_none(), || {
                    json!({
                        "kind": "zero_one",
                        "semigroup": file_value(&OrderedSemigroup::unordered(s.clone())),
                        "term": t.to_string(),
                        "assignment": assignment,
                        "check": failure,
                    })
                });
                if !ok {
                    return;
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// inversion_isotone

fn inversion_isotone(run: &mut Run, rng: &mut ChaCha8Rng, samples: usize, config: &SuiteConfig) {
    for _ in 0..samples {
        let a = random_sample(rng, config.size_cap, true);
        run.samples += 1;
        for (x, y) in a.order().pairs() {
            let (ix, iy) = (
                a.sgp().cr_inverse(x).expect("completely regular"),
                a.sgp().cr_inverse(y).expect("completely regular"),
            );
            let ok = run.check(a.leq(ix, iy), || {
                json!({"kind": "inversion", "semigroup": file_value(&a), "a": x, "b": y})
            });
            if !ok {
                return;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// nb_word

/// A pair that normal bands identify when `equal`, built by keeping the
/// first and last letter and the content of `u`.
fn nb_partner<R: Rng + ?Sized>(rng: &mut R, u: &OmegaTerm, letters: usize) -> OmegaTerm {
    let mut content: Vec<usize> = u.content().into_iter().collect();
    content.shuffle(rng);
    let mut parts = vec![OmegaTerm::Var(u.first_letter())];
    parts.extend(content.iter().map(|&v| OmegaTerm::Var(v)));
    if rng.gen_bool(0.5) {
        let inner = random_term(rng, content.len(), 2).rename(&|v| content[v]);
        parts.push(OmegaTerm::pow(inner, Shift::Zero));
    }
    let last = if rng.gen_bool(0.75) {
        u.last_letter()
    } else {
        rng.gen_range(0..letters)
    };
    parts.push(OmegaTerm::Var(last));
    OmegaTerm::concat(parts)
}

/// Whether `u = v` holds in every listed band, with a failing band index.
fn holds_in_bands(u: &OmegaTerm, v: &OmegaTerm, bands: &[FiniteSemigroup]) -> std::result::Result<(), usize> {
    let vars: Vec<usize> = u.content().union(&v.content()).copied().collect();
    let pos = |x: usize| vars.iter().position(|&y| y == x).unwrap();
    let (cu, cv) = (u.rename(&pos).compile(), v.rename(&pos).compile());
    let k = vars.len();
    let mut stack = Vec::with_capacity(16);
    for (bi, b) in bands.iter().enumerate() {
        let n = b.size();
        let mut digits = vec![0usize; k];
        loop {
            if cu.eval_with(b, &digits, &mut stack) != cv.eval_with(b, &digits, &mut stack) {
                return Err(bi);
            }
            let mut done = true;
            for d in digits.iter_mut().rev() {
                *d += 1;
                if *d < n {
                    done = false;
                    break;
                }
                *d = 0;
            }
            if done {
                break;
            }
        }
    }
    Ok(())
}

fn nb_word(run: &mut Run, rng: &mut ChaCha8Rng, samples: usize) {
    let bands = normal_bands(4);
    run.notes.push(format!("{} normal bands up to size 4", bands.len()));
    let mut agreeing = 0u64;
    for _ in 0..samples {
        let letters = rng.gen_range(1..=8);
        let depth = rng.gen_range(1..=4);
        let u = random_term(rng, letters, depth);
        let v = if rng.gen_bool(0.5) {
            nb_partner(rng, &u, letters)
        } else {
            random_term(rng, letters, depth)
        };
        run.samples += 1;
        let claimed = nb_word_problem(&u, &v);
        let free = NbElement::eval(&u) == NbElement::eval(&v);
        let exhaustive = holds_in_bands(&u, &v, &bands);
        agreeing += claimed as u64;
        let ok = run.check(claimed == free && claimed == exhaustive.is_ok(), || {
            json!({
                "kind": "nb_word",
                "u": u.to_string(),
                "v": v.to_string(),
                "band": exhaustive.err().map(|i| file_value(&OrderedSemigroup::unordered(bands[i].clone()))),
            })
        });
        if !ok {
            return;
        }
    }
    run.notes.push(format!("{agreeing} pairs identified by normal bands"));
}

// ---------------------------------------------------------------------------
// replay

fn witness_semigroup(w: &Value) -> Result<OrderedSemigroup> {
    let s = w.get("semigroup").ok_or_else(|| Error::Format("witness has no semigroup".into()))?;
    parse_semigroup(&s.to_string())
}

fn field<'a>(w: &'a Value, key: &str) -> Result<&'a Value> {
    w.get(key).ok_or_else(|| Error::Format(format!("witness has no {key}")))
}

fn usize_field(w: &Value, key: &str) -> Result<usize> {
    field(w, key)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::Format(format!("{key} is not an index")))
}

fn str_field<'a>(w: &'a Value, key: &str) -> Result<&'a str> {
    field(w, key)?.as_str().ok_or_else(|| Error::Format(format!("{key} is not a string")))
}

/// Re-checks a failure witness; `true` when the violation is reproduced.
pub fn replay(w: &Value) -> Result<bool> {
    let kind = str_field(w, "kind")?;
    match kind {
        "relation" => {
            let a = witness_semigroup(w)?;
            let r = parse_relation(str_field(w, "relation")?)?;
            let expect = field(w, "expect")?.as_bool().unwrap_or(true);
            Ok(holds(&a, &r) != expect)
        }
        "separating_relation" => {
            let a = witness_semigroup(w)?;
            let r = parse_relation(str_field(w, "relation")?)?;
            let g = standard_example(str_field(w, "absent")?)?;
            let both_fail = !holds(&a, &rel("x^w <= x^w y^w x^w")) && !holds(&a, &rel("x^w y^w x^w <= x^w"));
            Ok(both_fail && holds(&a, &r) && !holds(&g, &r))
        }
        "trace_kernel" => {
            let a = witness_semigroup(w)?;
            let pairs: Vec<(usize, usize)> = serde_json::from_value::<Vec<[usize; 2]>>(field(w, "quasiorder")?.clone())
                .map_err(|e| Error::Format(e.to_string()))?
                .into_iter()
                .map(|[i, j]| (i, j))
                .collect();
            let rho = StableQuasiorder::generated_by(a.sgp(), &pairs).matrix().clone();
            let c = trace_kernel_conditions(a.sgp(), &rho, usize_field(w, "s")?, usize_field(w, "t")?);
            Ok(c.iter().any(|&b| b != c[0]))
        }
        "inversion" => {
            let a = witness_semigroup(w)?;
            let (x, y) = (usize_field(w, "a")?, usize_field(w, "b")?);
            Ok(a.leq(x, y) && !a.leq(a.sgp().cr_inverse(x)?, a.sgp().cr_inverse(y)?))
        }
        "zero_one" => {
            let a = witness_semigroup(w)?;
            let t = parse_term(str_field(w, "term")?)?;
            let assignment: Vec<usize> = serde_json::from_value(field(w, "assignment")?.clone())
                .map_err(|e| Error::Format(e.to_string()))?;
            Ok(zero_one_failure(&t, a.sgp(), &assignment).is_some())
        }
        "nb_word" => {
            let u = parse_term(str_field(w, "u")?)?;
            let v = parse_term(str_field(w, "v")?)?;
            let claimed = nb_word_problem(&u, &v);
            Ok(claimed != (NbElement::eval(&u) == NbElement::eval(&v))
                || claimed != holds_in_bands(&u, &v, &normal_bands(4)).is_ok())
        }
        "selfdual" => {
            let a = witness_semigroup(w)?;
            Ok(is_selfdual(std::slice::from_ref(&a))? != is_selfdual(&[a.dual()])?)
        }
        "selfdual_oracle" => {
            let a = witness_semigroup(w)?;
            let g = standard_example(str_field(w, "generator")?)?;
            let sl = sl_component(&a)?;
            let claimed = if g.name() == "U+" { sl.has_u_plus() } else { sl.has_u_minus() };
            Ok(!claimed && divides_with(&g, &a, &DivideConfig::new(2))?.is_some())
        }
        "roundtrip" => {
            let a = witness_semigroup(w)?;
            Ok(roundtrip_failure(&a).is_some() || str_field(w, "check")? != "certificate")
        }
        "emery" | "emery_oracle" => {
            let node = EmeryNode::from_bits(usize_field(w, "bits")? as u8);
            let rep = node_representative(node);
            let got = emery_classify(&rep)?;
            if kind == "emery" {
                return Ok(got != node);
            }
            let g = standard_example(str_field(w, "generator")?)?;
            let found = divides_with(&g, &rep, &DivideConfig::new(usize_field(w, "bound")?))?.is_some();
            let gen = EmeryGen::ALL.into_iter().find(|x| x.name() == g.name()).expect("generator name");
            Ok(found != node.contains(gen))
        }
        _ => Err(Error::Format(format!("witness kind {kind} is checked by rerunning its suite"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic_and_regular() {
        for seed in 0..100 {
            let a = random_cr(12, seed);
            assert_eq!(a, random_cr(12, seed));
            assert!(a.size() <= 12);
            assert!(is_member(&a, "CR"));
            let b = random_nocr(12, seed);
            assert!(is_member(&b, "NOCR"), "seed {seed}");
        }
    }

    #[test]
    fn band_counts() {
        let sizes: Vec<usize> = (1..=4).map(|n| normal_bands(4).iter().filter(|b| b.size() == n).count()).collect();
        // one, three (left zero, right zero, chain), then larger counts
        assert_eq!(&sizes[..2], &[1, 3]);
        assert!(ordered_normal_bands(2).len() >= 5);
    }

    #[test]
    fn rees_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let c3 = cyclic_group(3);
        let s = random_rees(&mut rng, c3.sgp(), 2, 2);
        assert_eq!(s.size(), 12);
        assert!(s.is_completely_regular());
        let with_zero = adjoin_element(&s, true);
        assert!(with_zero.is_completely_regular());
    }

    #[test]
    fn transformations() {
        let s = transformation_semigroup(&[vec![1, 2, 0], vec![0, 0, 2]], 64).unwrap();
        assert!(s.size() > 3);
        assert!(transformation_semigroup(&[vec![1, 2, 3, 4, 0], vec![1, 0, 2, 3, 4]], 10).is_none());
    }

    #[test]
    fn trace_kernel_on_group_with_equality() {
        let g = standard_example("S3").unwrap();
        let rho = BoolMatrix::identity(6);
        for s in 0..6 {
            for t in 0..6 {
                let c = trace_kernel_conditions(g.sgp(), &rho, s, t);
                assert!(c.iter().all(|&b| b == (s == t)));
            }
        }
    }

    #[test]
    fn small_suites_pass() {
        let config = SuiteConfig {
            samples: Some(20),
            seed: 7,
            ..SuiteConfig::default()
        };
        for name in ["nocr_identities", "inversion_isotone", "zero_one", "nb_word", "trace_kernel"] {
            let r = run_suite(name, &config).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "{name}: {:?}", r.witness);
        }
        assert_eq!(run_suite("nope", &config).unwrap_err(), Error::UnknownSuite("nope".into()));
    }

    #[test]
    fn replays() {
        let rees = rees_example();
        let w = relation_witness(&rees, NOCR_IDENTITIES[0], true);
        assert!(replay(&w).unwrap());
        let w = relation_witness(&rees, NOCR_IDENTITIES[0], false);
        assert!(!replay(&w).unwrap());
        let w = json!({"kind": "separating_relation", "semigroup": file_value(&rees),
            "relation": SEPARATES_SL, "absent": "U+"});
        assert!(replay(&w).unwrap());
    }

    #[test]
    fn distributivity_check() {
        let chain = vec![vec![true, true], vec![false, true]];
        assert!(is_distributive_lattice(&chain));
        // the pentagon 0 < a < c < 1, 0 < b < 1
        let n5 = [[1, 1, 1, 1, 1], [0, 1, 1, 0, 1], [0, 0, 1, 0, 1], [0, 0, 0, 1, 1], [0, 0, 0, 0, 1]];
        let leq: Vec<Vec<bool>> = n5.iter().map(|r| r.iter().map(|&x| x == 1).collect()).collect();
        assert!(!is_distributive_lattice(&leq));
    }
}
