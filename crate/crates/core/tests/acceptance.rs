//! End-to-end acceptance checks. Each check prints one PASS/FAIL line.
//!
//! Two checks fail on purpose because the claims they test are false as
//! stated. They are listed in `KNOWN_FAILURES`, and the harness requires the
//! failing set to match that list exactly.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::Write as _;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};
use swapset_core::exact::{dd_m_exact, has_swap_set, star_partition_weight_oracle, SwapSetAnswer};
use swapset_core::families::doubled_subdivided_triangle;
use swapset_core::grid::{gamma_grid_dp, grid_bound, grid_swap_construct, p3_strip_swap, perfect_dom_member};
use swapset_core::product::{product_question_scan, product_swap_general, star_product_swap};
use swapset_core::small_alpha::{alpha2_scan, alpha3_bound_check, conjecture_scan};
use swapset_core::tree::{
    alpha_equals_ddm, alpha_equals_eviction, dd_m_tree, enumerate_trees, four_way_equality, is_weak_tree, s_weight,
    swap_set_from_partition, weak_reduction,
};
use swapset_core::{check_certificate, independence_number, DdmStatus, Graph};

const KNOWN_FAILURES: &[&str] = &["1d", "7c"];
const UNLIMITED: u64 = u64::MAX;

struct Outcome {
    id: &'static str,
    name: &'static str,
    pass: bool,
    detail: String,
    /// Deterministic record of everything the check computed.
    transcript: String,
    elapsed: Duration,
}

fn timed(
    id: &'static str,
    name: &'static str,
    limit: Duration,
    f: impl FnOnce(&mut String) -> (bool, String),
) -> Outcome {
    let start = Instant::now();
    let mut transcript = String::new();
    let (ok, mut detail) = f(&mut transcript);
    let elapsed = start.elapsed();
    let in_time = elapsed <= limit;
    if !in_time {
        detail.push_str(&format!("; over time limit {limit:?}"));
    }
    Outcome {
        id,
        name,
        pass: ok && in_time,
        detail,
        transcript,
        elapsed,
    }
}

fn exact_value(g: &Graph, log: &mut String, label: &str) -> (DdmStatus, Option<usize>) {
    let r = dd_m_exact(g, UNLIMITED).unwrap();
    if let Some(c) = &r.certificate {
        assert!(check_certificate(g, c).is_ok(), "{label}: solver certificate rejected");
    }
    let _ = writeln!(
        log,
        "{label}\t{}\t{}",
        r.display_value(),
        serde_json::to_string(&r).unwrap()
    );
    (r.status, r.k)
}

fn known_constant(
    id: &'static str,
    name: &'static str,
    g: Graph,
    want: Option<usize>,
    alpha: Option<usize>,
) -> Outcome {
    timed(id, name, Duration::from_secs(1), |log| {
        let (_, got) = exact_value(&g, log, name);
        let mut ok = got == want;
        let mut detail = format!(
            "expected {}, got {}",
            want.map_or("infinity".into(), |k| k.to_string()),
            got.map_or("infinity".into(), |k| k.to_string())
        );
        if let Some(a) = alpha {
            let found = independence_number(&g).unwrap();
            ok &= found == a;
            detail.push_str(&format!(", alpha {found}"));
        }
        (ok, detail)
    })
}

fn criterion_1() -> Vec<Outcome> {
    vec![
        known_constant("1a", "swap number of P4", Graph::path(4), Some(2), None),
        known_constant("1b", "swap number of K_{1,3}", Graph::star(3), None, None),
        known_constant("1c", "swap number of C4", Graph::cycle(4), Some(2), None),
        known_constant(
            "1d",
            "doubled subdivided triangle has no swap set",
            doubled_subdivided_triangle(),
            None,
            Some(6),
        ),
    ]
}

fn criterion_2() -> Outcome {
    timed(
        "2",
        "star products K_{1,p} x K_{1,q}",
        Duration::from_secs(120),
        |log| {
            let mut bad = Vec::new();
            for p in 1..=5 {
                for q in 1..=p.min(6 - p) {
                    let want = (p + q - 1).max(2);
                    let (g, cert, _) = star_product_swap(p, q).unwrap();
                    let (_, got) = exact_value(&g, log, &format!("K1,{p} x K1,{q}"));
                    let verified = check_certificate(&g, &cert).is_ok();
                    let _ = writeln!(log, "construction\t{}\t{}", cert.size(), cert.to_json());
                    if got != Some(want) || cert.size() != want || !verified {
                        bad.push(format!("({p},{q})"));
                    }
                }
            }
            (bad.is_empty(), format!("mismatches: {bad:?}"))
        },
    )
}

fn criterion_3() -> Outcome {
    timed(
        "3",
        "exhaustive tree checks, n <= 10",
        Duration::from_secs(300),
        |log| {
            let classes: usize = (1..=10).map(|n| enumerate_trees(n).len()).sum();
            let trees: Vec<Graph> = (2..=10).flat_map(enumerate_trees).collect();
            let mut failures: Vec<String> = Vec::new();
            let mut fail = |what: &str, t: &Graph| failures.push(format!("{what} on {}", t.to_graph6()));
            for t in &trees {
                let weak = is_weak_tree(t).unwrap();
                let alpha = independence_number(t).unwrap();
                let exact = dd_m_exact(t, UNLIMITED).unwrap();
                let has = matches!(has_swap_set(t, UNLIMITED).unwrap(), SwapSetAnswer::Yes(_));
                let (s, partition) = s_weight(t).unwrap();
                let (oracle, _) = star_partition_weight_oracle(t).unwrap();
                let reduction = weak_reduction(t).unwrap();
                let (reduced_s, _) = star_partition_weight_oracle(&reduction.reduced).unwrap();
                let _ = writeln!(
                    log,
                    "{}\tweak={weak}\talpha={alpha}\tS={s}\tdd_m={}",
                    t.to_graph6(),
                    exact.display_value()
                );
                // (a)
                if has != weak {
                    fail("swap set iff weak", t);
                }
                // (b) and (f)
                if weak {
                    let tree = dd_m_tree(t).unwrap();
                    if tree.k != exact.k || exact.k != Some(s) {
                        fail("tree swap number equals exact", t);
                    }
                    let built = swap_set_from_partition(t, &partition).unwrap();
                    if check_certificate(t, &built).is_err() || built.size() != s {
                        fail("labeling certificate", t);
                    }
                    if s > alpha {
                        fail("swap number at most alpha", t);
                    }
                }
                // (c)
                if s != oracle {
                    fail("DP weight equals partition oracle", t);
                }
                // (d)
                if oracle != reduced_s + reduction.removed.len() {
                    fail("weak reduction additivity", t);
                }
                // (e)
                if alpha_equals_ddm(t).unwrap() != (exact.k == Some(alpha)) {
                    fail("alpha equals swap number characterization", t);
                }
                if alpha_equals_eviction(t).unwrap() != (oracle == alpha) {
                    fail("alpha equals eviction number characterization", t);
                }
                let gamma = swapset_core::domination_number(t).unwrap();
                if four_way_equality(t).unwrap() != (gamma == alpha) {
                    fail("four-way equality characterization", t);
                }
            }
            if classes != 201 {
                failures.push(format!("{classes} tree classes with n <= 10"));
            }
            let ok = failures.is_empty();
            (
                ok,
                format!(
                    "{} trees ({classes} classes incl. K1); failures: {failures:?}",
                    trees.len()
                ),
            )
        },
    )
}

fn criterion_4() -> Outcome {
    timed(
        "4",
        "grid certificates, 8 <= n <= m <= 30",
        Duration::from_secs(60),
        |log| {
            let mut failures = Vec::new();
            let mut shapes = 0;
            let mut size_16_12 = 0;
            for m in 8..=30 {
                for n in 8..=m {
                    shapes += 1;
                    match grid_swap_construct(m, n) {
                        Ok(gs) => {
                            let size = gs.certificate.size();
                            let _ = writeln!(
                                log,
                                "{m}x{n}\t{size}\trepaired={}\t{}",
                                gs.repaired,
                                gs.certificate.to_json()
                            );
                            if check_certificate(&gs.graph, &gs.certificate).is_err() || size > grid_bound(m, n) {
                                failures.push(format!("{m}x{n}"));
                            }
                            if (m, n) == (16, 12) {
                                size_16_12 = size;
                            }
                        }
                        Err(e) => failures.push(format!("{m}x{n}: {e}")),
                    }
                }
            }
            let ok = failures.is_empty() && (1..=53).contains(&size_16_12);
            (
                ok,
                format!("{shapes} shapes, |D| = {size_16_12} on 16x12; failures: {failures:?}"),
            )
        },
    )
}

fn criterion_5() -> Outcome {
    timed("5", "P3 strips, 3 <= k <= 25", Duration::from_secs(60), |log| {
        let mut bad = Vec::new();
        for k in 3..=25 {
            let (g, cert) = p3_strip_swap(k).unwrap();
            let gamma = gamma_grid_dp(3, 4 * k + 1).unwrap();
            let _ = writeln!(log, "{k}\t{}\t{gamma}\t{}", cert.size(), cert.to_json());
            if check_certificate(&g, &cert).is_err() || cert.size() != 3 * k + 2 || gamma != 3 * k + 1 {
                bad.push(k);
            }
        }
        (bad.is_empty(), format!("bad k: {bad:?}"))
    })
}

fn criterion_6() -> Outcome {
    timed(
        "6",
        "perfect domination exactly-once window",
        Duration::from_secs(1),
        |log| {
            let mut violations = 0;
            for t in 0..5 {
                let mut members = 0;
                for x in 0..50 {
                    for y in 0..50 {
                        let hits = [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)]
                            .iter()
                            .filter(|(dx, dy)| perfect_dom_member(x + dx, y + dy, t).unwrap())
                            .count();
                        violations += usize::from(hits != 1);
                        members += usize::from(perfect_dom_member(x, y, t).unwrap());
                    }
                }
                let _ = writeln!(log, "t={t}\tmembers={members}");
            }
            (violations == 0, format!("{violations} violations"))
        },
    )
}

fn criterion_7() -> Vec<Outcome> {
    const LIMIT: Duration = Duration::from_secs(1800);
    let a2 = timed("7a", "alpha = 2 gives a certificate of size <= 2", LIMIT, |log| {
        let r = alpha2_scan(8).unwrap();
        log.push_str(&r.to_tsv());
        let n = r.counterexamples.len();
        (
            n == 0 && !r.records.is_empty(),
            format!("{} graphs, {n} violations", r.records.len()),
        )
    });
    let start = Instant::now();
    let a3 = alpha3_bound_check(8).unwrap();
    let a3_elapsed = start.elapsed();
    let claim = |id: &'static str, name: &'static str, text: &str| {
        timed(id, name, LIMIT.saturating_sub(a3_elapsed), |log| {
            let hits: Vec<&str> = a3
                .counterexamples
                .iter()
                .filter(|c| c.claim.contains(text))
                .map(|c| c.id.as_str())
                .collect();
            let mut strong = 0;
            for h in &hits {
                let g = Graph::from_graph6(h).unwrap();
                let is_strong = swapset_core::is_strong_graph(&g);
                strong += usize::from(is_strong);
                let _ = writeln!(log, "{h}\tstrong={is_strong}");
            }
            let detail = format!(
                "{} alpha = 3 graphs, violations ({strong} with a strong stem): {hits:?}",
                a3.records.len()
            );
            (hits.is_empty(), detail)
        })
    };
    let mut b = claim("7b", "alpha = 3 with a swap set gives swap number <= 3", "at most 3");
    b.transcript.push_str(&a3.to_tsv());
    b.elapsed += a3_elapsed;
    let mut c = claim("7c", "alpha = 3 and n >= 6 gives a swap set", "gives a swap set");
    c.elapsed += a3_elapsed;
    let d = timed("7d", "no swap number above alpha", LIMIT, |log| {
        let r = conjecture_scan(8).unwrap();
        log.push_str(&r.to_tsv());
        log.push_str(&r.thresholds_tsv());
        let n = r.counterexamples.len();
        (n == 0, format!("{} graphs, {n} violations", r.records.len()))
    });
    vec![a2, b, c, d]
}

/// Random connected graph: a random recursive tree plus extra edges.
fn random_connected(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.random_range(0..v), v)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) && !edges.contains(&(u, v)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn criterion_8() -> Outcome {
    timed(
        "8",
        "product certificates and gamma-product scan, order <= 24",
        Duration::from_secs(600),
        |log| {
            let scan = product_question_scan(24).unwrap();
            log.push_str(&scan.to_tsv());
            let undecided = scan.rows.iter().filter(|r| r.ddm_product == "?").count();
            let gamma_violations = scan.violations("gamma");
            // Factor enumeration stops at eight vertices; K2 against larger
            // factors is sampled.
            let mut rng = StdRng::seed_from_u64(0x5eed);
            let mut sampled_failures = Vec::new();
            let mut sampled = 0;
            for n in 9..=12 {
                for _ in 0..50 {
                    let p = rng.random_range(0.05..0.5);
                    let h = random_connected(&mut rng, n, p);
                    sampled += 1;
                    match product_swap_general(&Graph::path(2), &h) {
                        Ok((g, c)) if check_certificate(&g, &c).is_ok() => {
                            let _ = writeln!(log, "K2 x {}\t{}", h.to_graph6(), c.size());
                        }
                        Ok(_) => sampled_failures.push(h.to_graph6()),
                        Err(e) => sampled_failures.push(format!("{}: {e}", h.to_graph6())),
                    }
                }
            }
            let ok = scan.construction_failures.is_empty()
                && gamma_violations == 0
                && undecided == 0
                && sampled_failures.is_empty();
            let detail = format!(
                "{} pairs with factors <= {} vertices, {} construction failures, {gamma_violations} gamma violations, \
             {undecided} undecided; {sampled} sampled K2 pairs of order 18-24, failures: {sampled_failures:?}",
                scan.rows.len(),
                scan.factor_cap,
                scan.construction_failures.len()
            );
            (ok, detail)
        },
    )
}

fn run_all() -> Vec<Outcome> {
    let mut out = criterion_1();
    out.push(criterion_2());
    out.push(criterion_3());
    out.push(criterion_4());
    out.push(criterion_5());
    out.push(criterion_6());
    out.extend(criterion_7());
    out.push(criterion_8());
    out
}

fn transcript(outcomes: &[Outcome]) -> String {
    outcomes
        .iter()
        .map(|o| format!("== {} {} {}\n{}\n{}", o.id, o.pass, o.detail, o.name, o.transcript))
        .collect()
}

#[test]
fn acceptance() {
    let first = run_all();
    let second = run_all();
    let (a, b) = (transcript(&first), transcript(&second));
    let deterministic = a == b;

    // Written to the raw stderr handle so the report shows without --nocapture.
    let mut err = std::io::stderr().lock();
    let _ = writeln!(err);
    for o in &first {
        let tag = if o.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(err, "{tag} [{}] {} ({:.2?}): {}", o.id, o.name, o.elapsed, o.detail);
    }
    let tag = if deterministic { "PASS" } else { "FAIL" };
    let _ = writeln!(err, "{tag} [9] repeated runs are byte-identical ({} bytes)", a.len());

    let failing: BTreeSet<&str> = first
        .iter()
        .chain(&second)
        .filter(|o| !o.pass)
        .map(|o| o.id)
        .chain((!deterministic).then_some("9"))
        .collect();
    let known: BTreeSet<&str> = KNOWN_FAILURES.iter().copied().collect();
    let _ = writeln!(err, "known failures: {known:?}");
    assert_eq!(
        failing, known,
        "failing checks differ from the documented known failures"
    );
}
