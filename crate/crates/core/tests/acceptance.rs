//! The ten acceptance criteria, one line each. Exits nonzero when any
//! criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use ocrlab::classify::{emery_classify, is_selfdual, sl_component, EmeryGen, EmeryNode, SlPart};
use ocrlab::decompose::{nocr_embedding, Variant};
use ocrlab::divide::divides;
use ocrlab::terms::parse_relation;
use ocrlab::varieties::satisfies;
use ocrlab::verify::{
    emery_order_matrix, is_distributive_lattice, node_representative, ordered_normal_bands, random_nocr, run_suite,
    selfduality_corpus, SuiteConfig, Verdict,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn suite(name: &str, samples: usize, seed: u64) -> Outcome {
    let config = SuiteConfig {
        samples: Some(samples),
        seed,
        ..SuiteConfig::default()
    };
    let r = run_suite(name, &config).expect("known suite");
    let mut detail = format!("{:?}, {} samples, {} checks", r.verdict, r.samples, r.checks);
    if let Some(w) = &r.witness {
        detail.push_str(&format!(", witness {w}"));
    }
    for n in &r.notes {
        detail.push_str(&format!("; {n}"));
    }
    outcome(r.verdict == Verdict::Pass, detail)
}

fn emery_lattice() -> Outcome {
    let bands = ordered_normal_bands(4);
    let nodes: BTreeSet<EmeryNode> = bands.iter().map(|a| emery_classify(a).unwrap()).collect();
    let leq = emery_order_matrix();
    let all = EmeryNode::all();
    let boolean = (0..16).all(|i| (0..16).all(|j| leq[i][j] == all[i].leq(all[j])));
    outcome(
        nodes.len() == 16 && boolean && is_distributive_lattice(&leq),
        format!("{} ordered normal bands, {} nodes, order is 2^4: {boolean}", bands.len(), nodes.len()),
    )
}

fn oracle_agreement() -> Outcome {
    let mut disagreements = 0;
    for bits in 0..16u8 {
        let node = EmeryNode::from_bits(bits);
        let rep = node_representative(node);
        if emery_classify(&rep).unwrap() != node {
            disagreements += 1;
        }
        for g in EmeryGen::ALL {
            let found = matches!(divides(&g.example(), &rep, 2), Ok(Some(_)));
            if found != node.contains(g) {
                disagreements += 1;
            }
        }
    }
    outcome(disagreements == 0, format!("{disagreements} disagreements over 16 subsets"))
}

fn roundtrip() -> Outcome {
    let p = parse_relation("x^w <= x^w y^w x^w").unwrap();
    let mut done = 0;
    let mut failures = 0;
    let mut seed = 0;
    while done < 200 {
        let a = random_nocr(8, seed);
        seed += 1;
        if !satisfies(&a, &p).unwrap().holds {
            continue;
        }
        done += 1;
        let ok = nocr_embedding(&a, Variant::Top)
            .map(|c| c.validation.multiplicative && c.validation.isotone && c.validation.injective)
            .unwrap_or(false);
        if !ok {
            failures += 1;
        }
    }
    outcome(failures == 0, format!("{done} samples, {failures} certificate failures"))
}

fn selfduality() -> Outcome {
    let corpus = selfduality_corpus();
    let mut mismatches = 0;
    let mut confirmed = 0;
    let mut inconclusive = 0;
    for a in &corpus {
        let present = |g: EmeryGen| matches!(divides(&g.example(), a, 2), Ok(Some(_)));
        let (up, um) = (present(EmeryGen::UPlus), present(EmeryGen::UMinus));
        if is_selfdual(std::slice::from_ref(a)).unwrap() != (up == um) {
            mismatches += 1;
        }
        if sl_component(a).unwrap() == SlPart::SlFull {
            match divides(&a.dual(), a, 2) {
                Ok(Some(_)) => confirmed += 1,
                _ => inconclusive += 1,
            }
        }
    }
    outcome(
        mismatches == 0,
        format!(
            "{} members, {mismatches} criterion mismatches, SlFull dual divisors: {confirmed} found, {inconclusive} inconclusive",
            corpus.len()
        ),
    )
}

fn main() {
    type Criterion = (&'static str, Duration, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("emery lattice from ordered normal bands up to size 4", Duration::from_secs(60), emery_lattice),
        ("generator subsets agree with the divisor oracle", Duration::from_secs(120), oracle_agreement),
        ("trace_kernel suite", Duration::from_secs(300), || suite("trace_kernel", 500, 1)),
        ("nocr_identities suite", Duration::MAX, || suite("nocr_identities", 500, 7)),
        ("nocr_embedding certificates", Duration::from_secs(300), roundtrip),
        ("normal band word problem", Duration::MAX, || suite("nb_word", 10_000, 3)),
        ("modularity shadow", Duration::from_secs(60), || suite("modularity", 1, 0)),
        ("selfduality decision on the corpus", Duration::MAX, selfduality),
        ("zero_one suite", Duration::MAX, || suite("zero_one", 10_000, 5)),
        ("capB shadow", Duration::MAX, || suite("capB", 1, 0)),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let elapsed = start.elapsed();
        let pass = o.pass && elapsed <= *limit;
        if !pass {
            failed += 1;
        }
        println!(
            "criterion {:>2} {}: {name} ({:.1}s) {}",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            o.detail
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
