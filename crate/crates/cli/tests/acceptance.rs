//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the report is always printed; the
//! process exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use imbalance_cli::format;
use imbalance_core::equalsum::min_odd_equal_sum;
use imbalance_core::oracle::{brute_zero_sum_min_odd, enumerate_tournaments};
use imbalance_core::realize::{max_arc_count, max_realization};
use imbalance_core::sequences::{canonical_sequence, check_landau, check_tournament_imbalance};
use imbalance_core::tis::{
    add_apex_zero, add_arcs, decide_tis, order_upper_bound, Construction, TisDecision,
};
use imbalance_core::{Digraph, ImbalanceSequence, ImbalanceSet, ScoreSequence};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Wall-clock limits, pinned.
const REALIZE_4_2_M2_LIMIT: Duration = Duration::from_secs(1);
const DECIDE_6_M10_LIMIT: Duration = Duration::from_millis(100);
const ODD_SWEEP_LIMIT: Duration = Duration::from_secs(60);
const EVEN_SWEEP_LIMIT: Duration = Duration::from_secs(60);
const ENUMERATION_LIMIT: Duration = Duration::from_secs(30);
const RANDOM_REALIZATION_LIMIT: Duration = Duration::from_secs(10);
const SMALL_SMOKE_LIMIT: Duration = Duration::from_secs(2);
const STRESS_LIMIT: Duration = Duration::from_secs(60);

const RANDOM_SEQUENCES: usize = 200;
const RANDOM_MAX_ORDER: usize = 30;
const SEED: u64 = 0x1b_a1a_4ce;
/// Odd stress set: n = 1 * 5001 + 1 * 4999 = 10_000.
const STRESS_SET: [i64; 2] = [4999, -5001];
/// Even stress set: n = 10_002, witness 2501 * 5000 = 2500 * 5002.
const EVEN_STRESS_SET: [i64; 2] = [5000, -5002];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(label: &str, elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || {
        format!("{label} took {elapsed:?}, limit {limit:?}")
    })
}

fn set(values: &[i64]) -> ImbalanceSet {
    ImbalanceSet::new(values.iter().copied()).expect("valid set")
}

fn subsets(universe: &[i64], min: usize, max: usize) -> Vec<Vec<i64>> {
    (1u32..1 << universe.len())
        .filter(|m| (min..=max).contains(&(m.count_ones() as usize)))
        .map(|m| {
            (0..universe.len())
                .filter(|i| m >> i & 1 == 1)
                .map(|i| universe[i])
                .collect()
        })
        .collect()
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// Rebuild the certificate's completion step and check it from the outside:
/// the old vertices keep their imbalances, the new ones carry the expected
/// values, and the result is a tournament.
fn check_completion(
    z: &ImbalanceSet,
    construction: &Construction,
) -> Result<Option<usize>, String> {
    let (near, new_imbalances, g) = match construction {
        Construction::Single | Construction::Odd => return Ok(None),
        Construction::Apex => {
            let near = max_realization(&canonical_sequence(z).unwrap()).unwrap();
            let g = add_apex_zero(&near).map_err(|e| format!("{z}: apex: {e}"))?;
            (near, vec![0], g)
        }
        Construction::AddArcs(w) => {
            let near = max_realization(&canonical_sequence(z).unwrap()).unwrap();
            let g = add_arcs(&near, w).map_err(|e| format!("{z}: add arcs: {e}"))?;
            let expected =
                w.xs.iter()
                    .copied()
                    .chain(w.ys.iter().map(|&y| -y))
                    .collect();
            (near, expected, g)
        }
    };
    let n = near.graph.order();
    let after = g.imbalances();
    ensure(near.is_near_tournament, || {
        format!("{z}: base is not a near tournament")
    })?;
    ensure(after[..n] == near.graph.imbalances()[..], || {
        format!("{z}: old imbalances changed")
    })?;
    ensure(after[n..] == new_imbalances[..], || {
        format!(
            "{z}: new vertices carry {:?}, expected {new_imbalances:?}",
            &after[n..]
        )
    })?;
    ensure(g.is_tournament(), || {
        format!("{z}: completion is not a tournament")
    })?;
    Ok(Some(g.order()))
}

/// Decide `z` and check its certificate, recording completion checks.
fn decide_checked(z: &ImbalanceSet, shared: &mut Shared) -> Result<TisDecision, String> {
    let d = decide_tis(z).map_err(|e| format!("{z}: {e}"))?;
    if let TisDecision::Yes {
        certificate,
        construction,
    } = &d
    {
        ensure(certificate.is_tournament(), || {
            format!("{z}: not a tournament")
        })?;
        ensure(certificate.imbalance_set() == *z, || {
            format!("{z}: certificate has set {}", certificate.imbalance_set())
        })?;
        let completed = check_completion(z, construction).inspect_err(|e| {
            shared.completion_failure.get_or_insert_with(|| e.clone());
        })?;
        if let Some(order) = completed {
            shared.completions += 1;
            ensure(order == certificate.order(), || {
                format!("{z}: completion order differs")
            })?;
        }
    }
    Ok(d)
}

#[derive(Default)]
struct Shared {
    /// Certificates from criteria 3 and 4: (set, order, bound, n).
    certificates: Vec<(ImbalanceSet, usize, u128, u128)>,
    /// Even instances with a witness: (set, witness length, brute length, n).
    even_witnesses: Vec<(ImbalanceSet, usize, Option<usize>, u128)>,
    completions: usize,
    completion_failure: Option<String>,
}

fn criterion_1(shared: &mut Shared) -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_imbalance"))
        .args(["realize", "4,2,-2", "--format", "dot"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(out.status.success(), || {
        format!("exit {:?}", out.status.code())
    })?;
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let expected = std::fs::read_to_string(golden("set_4_2_-2.dot")).map_err(|e| e.to_string())?;
    ensure(text == expected, || {
        "arc set differs from the golden file".into()
    })?;
    let g = format::parse_dot(&text)
        .and_then(|r| r.build())
        .map_err(|e| e.to_string())?;
    ensure(g.is_tournament() && g.order() == 13, || {
        format!("order {}", g.order())
    })?;
    let want = [4, 4, 4, 2, 2, -2, -2, -2, -2, -2, -2, -2, -2];
    ensure(g.imbalance_sequence().entries() == want, || {
        format!("imbalance sequence {:?}", g.imbalance_sequence().entries())
    })?;
    within("realize", elapsed, REALIZE_4_2_M2_LIMIT)?;
    let z = set(&[4, 2, -2]);
    decide_checked(&z, shared)?;
    Ok(format!("order 13, golden arcs match, {elapsed:.1?}"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_imbalance"))
        .args(["decide", "6,-10"])
        .output()
        .map_err(|e| e.to_string())?;
    let process = start.elapsed();
    ensure(out.status.code() == Some(2), || {
        format!("exit {:?}", out.status.code())
    })?;
    let text = String::from_utf8_lossy(&out.stdout);
    ensure(text == "no, no-odd-equal-sum\n", || {
        format!("printed {text:?}")
    })?;
    let start = Instant::now();
    let d = decide_tis(&set(&[6, -10])).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(
        d.refusal().map(|r| r.as_str()) == Some("no-odd-equal-sum"),
        || format!("{d:?}"),
    )?;
    within("decide", elapsed, DECIDE_6_M10_LIMIT)?;
    Ok(format!(
        "refused no-odd-equal-sum, {elapsed:.1?} ({process:.1?} incl. process)"
    ))
}

fn criterion_3(shared: &mut Shared) -> Outcome {
    let start = Instant::now();
    let odd: Vec<i64> = (-9..=9).step_by(2).collect();
    let (mut yes, mut refused) = (0, 0);
    for members in subsets(&odd, 2, 4) {
        let z = set(&members);
        let completions = shared.completions;
        let d = decide_checked(&z, shared)?;
        let both = members.iter().any(|&v| v > 0) && members.iter().any(|&v| v < 0);
        ensure(d.is_yes() == both, || format!("{z}: {d:?}"))?;
        ensure(shared.completions == completions, || {
            format!("{z}: odd set used a completion")
        })?;
        if let Some(order) = d.order() {
            let n = z.canonical_order().unwrap();
            ensure(order as u128 == n, || {
                format!("{z}: order {order}, n = {n}")
            })?;
            shared
                .certificates
                .push((z.clone(), order, order_upper_bound(&z).unwrap(), n));
            yes += 1;
        } else {
            refused += 1;
        }
    }
    within("odd sweep", start.elapsed(), ODD_SWEEP_LIMIT)?;
    Ok(format!(
        "{yes} realized at order n, {refused} one-sided refused, {:.1?}",
        start.elapsed()
    ))
}

fn criterion_4(shared: &mut Shared) -> Outcome {
    let start = Instant::now();
    let even: Vec<i64> = (-8..=8).step_by(2).collect();
    let mut grid = subsets(&even, 1, 3);
    for named in [[2, -2], [4, -4], [8, -8], [2, -4], [4, -2], [4, -6]] {
        grid.push(named.to_vec());
    }
    grid.push(vec![2, 0, -2]);
    let mut yes = 0;
    for members in &grid {
        let z = set(members);
        let d = decide_checked(&z, shared)?;
        let both = z.has_both_signs();
        let expected = if z.is_zero_only() {
            true
        } else if !both {
            false
        } else if z.contains(0) {
            true
        } else {
            let n = z.canonical_order().unwrap();
            let brute = brute_zero_sum_min_odd(&members.clone(), n as usize - 1);
            let w = min_odd_equal_sum(z.non_negative(), z.negative_magnitudes())
                .map_err(|e| format!("{z}: {e}"))?;
            if let Some(w) = &w {
                shared
                    .even_witnesses
                    .push((z.clone(), w.total_len(), brute, n));
            } else {
                ensure(brute.is_none(), || {
                    format!("{z}: missed witness of length {brute:?}")
                })?;
            }
            brute.is_some()
        };
        ensure(d.is_yes() == expected, || {
            format!("{z}: decided {}, expected {expected}", d.is_yes())
        })?;
        if let Some(order) = d.order() {
            yes += 1;
            if !z.is_zero_only() {
                let n = z.canonical_order().unwrap();
                shared
                    .certificates
                    .push((z.clone(), order, order_upper_bound(&z).unwrap(), n));
            }
        }
    }
    for named in [[2, -2], [4, -4], [8, -8]] {
        ensure(!decide_tis(&set(&named)).unwrap().is_yes(), || {
            format!("{named:?} accepted")
        })?;
    }
    for named in [&[2, -4][..], &[4, -2], &[2, 0, -2], &[4, -6]] {
        ensure(decide_tis(&set(named)).unwrap().is_yes(), || {
            format!("{named:?} refused")
        })?;
    }
    within("even sweep", start.elapsed(), EVEN_SWEEP_LIMIT)?;
    Ok(format!(
        "{} sets agree with the oracle ({yes} realizable), {:.1?}",
        grid.len(),
        start.elapsed()
    ))
}

fn nondecreasing(n: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                let low = p.last().copied().unwrap_or(0);
                (low..=max).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for n in 1..=5usize {
        let mut scores = BTreeSet::new();
        let mut imbalances = BTreeSet::new();
        for g in enumerate_tournaments(n).map_err(|e| e.to_string())? {
            scores.insert(g.score_sequence().unwrap().entries().to_vec());
            imbalances.insert(g.imbalance_sequence().into_vec());
            total += 1;
        }
        let mut landau = BTreeSet::new();
        let mut tournament = BTreeSet::new();
        for s in nondecreasing(n, n as i64 - 1) {
            if check_landau(&ScoreSequence::new(s.clone()).unwrap()) {
                landau.insert(s);
            }
        }
        // Imbalances in [-(n-1), n-1] of either parity.
        let m = n as i64 - 1;
        for s in nondecreasing(n, 2 * m) {
            let t: Vec<i64> = s.iter().rev().map(|&v| v - m).collect();
            if check_tournament_imbalance(&ImbalanceSequence::new(t.clone()).unwrap()) {
                tournament.insert(t);
            }
        }
        ensure(landau == scores, || format!("score sets differ at n = {n}"))?;
        ensure(tournament == imbalances, || {
            format!("imbalance sets differ at n = {n}")
        })?;
    }
    within("enumeration", start.elapsed(), ENUMERATION_LIMIT)?;
    Ok(format!(
        "exact agreement over {total} tournaments, {:.1?}",
        start.elapsed()
    ))
}

fn random_oriented(rng: &mut StdRng, n: usize) -> Digraph {
    let mut g = Digraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            match rng.gen_range(0..3) {
                0 => g.add_arc(u, v).unwrap(),
                1 => g.add_arc(v, u).unwrap(),
                _ => {}
            }
        }
    }
    g
}

/// A random tournament minus a random perfect matching: all imbalances even.
fn random_near(rng: &mut StdRng, n: usize) -> Digraph {
    let mut ids: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        ids.swap(i, rng.gen_range(0..=i));
    }
    let mut partner = vec![0; n];
    for p in ids.chunks(2) {
        partner[p[0]] = p[1];
        partner[p[1]] = p[0];
    }
    let mut g = Digraph::new(n);
    for (u, &skip) in partner.iter().enumerate() {
        for v in u + 1..n {
            if skip != v {
                if rng.gen_bool(0.5) {
                    g.add_arc(u, v).unwrap();
                } else {
                    g.add_arc(v, u).unwrap();
                }
            }
        }
    }
    g
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut near_cases = 0;
    for i in 0..RANDOM_SEQUENCES {
        let even_class = i % 2 == 1;
        let source = if even_class {
            let n = 2 * rng.gen_range(1..=RANDOM_MAX_ORDER / 2);
            random_near(&mut rng, n)
        } else {
            let n = rng.gen_range(1..=RANDOM_MAX_ORDER);
            random_oriented(&mut rng, n)
        };
        let t = source.imbalance_sequence();
        let n = t.len();
        let r = max_realization(&t).map_err(|e| format!("{:?}: {e}", t.entries()))?;
        let bound: i64 = t
            .entries()
            .iter()
            .map(|&v| (n as i64 - 1 + v).div_euclid(2))
            .sum();
        ensure(r.arc_count as i64 == bound, || {
            format!("{:?}: {} arcs, expected {bound}", t.entries(), r.arc_count)
        })?;
        ensure(max_arc_count(&t).unwrap() as i64 == bound, || {
            "max_arc_count".into()
        })?;
        ensure(r.graph.imbalance_sequence() == t, || {
            "wrong imbalances".into()
        })?;
        for v in 0..n {
            let missing = n - 1 - r.graph.out_degree(v) - r.graph.in_degree(v);
            ensure(missing <= 1, || {
                format!("{:?}: vertex {v} misses {missing}", t.entries())
            })?;
        }
        if t.entries().iter().all(|v| v % 2 == 0) && n % 2 == 0 && n >= 2 {
            near_cases += 1;
            ensure(
                r.is_near_tournament && r.arc_count == n * (n - 2) / 2,
                || {
                    format!(
                        "{:?}: not a near tournament with n(n-2)/2 arcs",
                        t.entries()
                    )
                },
            )?;
        }
    }
    within(
        "random realizations",
        start.elapsed(),
        RANDOM_REALIZATION_LIMIT,
    )?;
    Ok(format!(
        "{RANDOM_SEQUENCES} sequences ({near_cases} all-even, even order), {:.1?}",
        start.elapsed()
    ))
}

fn criterion_7(shared: &Shared) -> Outcome {
    ensure(!shared.even_witnesses.is_empty(), || {
        "no even witnesses collected".into()
    })?;
    for (z, len, brute, n) in &shared.even_witnesses {
        ensure((*len as u128) < *n, || {
            format!("{z}: length {len} not below n = {n}")
        })?;
        ensure(Some(*len) == *brute, || {
            format!("{z}: length {len}, brute force {brute:?}")
        })?;
    }
    Ok(format!(
        "{} witnesses minimal and below n",
        shared.even_witnesses.len()
    ))
}

fn criterion_8(shared: &Shared) -> Outcome {
    ensure(!shared.certificates.is_empty(), || {
        "no certificates collected".into()
    })?;
    for (z, order, bound, n) in &shared.certificates {
        let order = *order as u128;
        ensure(order <= *bound, || {
            format!("{z}: order {order} above bound {bound}")
        })?;
        if z.all_even() {
            if z.contains(0) {
                ensure(order == n + 1, || {
                    format!("{z}: order {order}, expected n + 1 = {}", n + 1)
                })?;
            } else {
                ensure(order < 2 * n, || format!("{z}: order {order} above 2n - 1"))?;
            }
        }
    }
    Ok(format!(
        "{} certificates within bounds",
        shared.certificates.len()
    ))
}

fn criterion_9(shared: &Shared) -> Outcome {
    if let Some(e) = &shared.completion_failure {
        return Err(e.clone());
    }
    ensure(shared.completions > 0, || "no completions exercised".into())?;
    Ok(format!(
        "{} apex/add-arcs completions preserved imbalances",
        shared.completions
    ))
}

fn decide_and_realize(z: &ImbalanceSet) -> Result<usize, String> {
    let d = decide_tis(z).map_err(|e| format!("{z}: {e}"))?;
    let g = d.certificate().ok_or_else(|| format!("{z} refused"))?;
    ensure(g.is_tournament() && g.imbalance_set() == *z, || {
        format!("{z}: bad certificate")
    })?;
    Ok(g.order())
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let small = decide_and_realize(&set(&[10, -12]))?;
    let small_time = start.elapsed();
    within("{10, -12}", small_time, SMALL_SMOKE_LIMIT)?;
    let start = Instant::now();
    let stress = decide_and_realize(&set(&STRESS_SET))?;
    let stress_time = start.elapsed();
    within("stress set", stress_time, STRESS_LIMIT)?;
    let start = Instant::now();
    let even = decide_and_realize(&set(&EVEN_STRESS_SET))?;
    let even_time = start.elapsed();
    within("even stress set", even_time, STRESS_LIMIT)?;
    Ok(format!(
        "{{10, -12}} order {small} in {small_time:.1?}; {STRESS_SET:?} order {stress} in \
         {stress_time:.1?}; {EVEN_STRESS_SET:?} order {even} in {even_time:.1?}"
    ))
}

fn main() {
    let mut shared = Shared::default();
    let results: Vec<(usize, &str, Outcome)> = vec![
        (1, "realize {4, 2, -2}", criterion_1(&mut shared)),
        (2, "refuse {6, -10}", criterion_2()),
        (3, "odd characterization sweep", criterion_3(&mut shared)),
        (
            4,
            "even characterization vs oracle",
            criterion_4(&mut shared),
        ),
        (5, "enumeration ground truth", criterion_5()),
        (6, "maximum-arc realization", criterion_6()),
        (7, "witness length bound", criterion_7(&shared)),
        (8, "order bounds", criterion_8(&shared)),
        (9, "construction invariants", criterion_9(&shared)),
        (10, "complexity smoke check", criterion_10()),
    ];
    let mut failed = 0;
    for (id, name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("criterion {id:>2} PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {name}: {detail}");
            }
        }
    }
    println!("{} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
