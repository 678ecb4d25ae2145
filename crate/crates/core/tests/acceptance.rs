//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero when any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use orbitflag_core::flags::{ExhaustionSpec, Family, FiniteTypeDescriptor, FlagType};
use orbitflag_core::orbits::{enumerate_orbits, enumerate_orbits_with, EnumerateOptions, OrbitSet};
use orbitflag_core::stabilization::{check_injectivity, trace_counts, Finiteness, LevelTrace, LimitVerdict, TraceOptions};
use orbitflag_core::structures::standard_su;
use orbitflag_core::verify::{all_contexts, run_suite, Suite, VerifyConfig};

fn tri(m: usize) -> usize {
    (m + 1) * (m + 2) / 2
}

/// Three-branch orbit count on Gr(k, n) under SU(p, n-p).
fn su_count(n: usize, k: usize, p: usize) -> usize {
    let l = p.min(n - p);
    if n - l <= k {
        tri(n - k)
    } else if l <= k {
        tri(l)
    } else {
        tri(k)
    }
}

/// Limit grassmannian counts along each exhaustion.
fn stable_count(family: Family, k: usize) -> usize {
    match family {
        Family::SuP(p) if p <= k => tri(p),
        Family::SuP(_) | Family::SuInf => tri(k),
        Family::Slr => k + 1,
        Family::Slh => k / 2 + 1,
    }
}

#[derive(Default)]
struct Outcome {
    checks: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Shared {
    closed: Outcome,
    verdicts: Vec<(Family, FiniteTypeDescriptor, LimitVerdict)>,
}

impl Shared {
    fn record_set(&mut self, set: &OrbitSet) {
        let closed = set.records.iter().filter(|r| r.is_closed).count();
        self.closed.check(closed == 1, || format!("{}: {closed} closed orbits", set.context()));
    }

    fn record_trace(&mut self, trace: &LevelTrace, verdict: &LimitVerdict) {
        for l in &trace.levels {
            self.record_set(&l.orbits);
        }
        self.verdicts.push((trace.exhaustion.family, trace.descriptor.clone(), *verdict));
    }
}

fn su_grassmannians() -> Vec<(usize, usize, usize)> {
    let mut v = Vec::new();
    for n in 2..=8 {
        for k in 1..n {
            for p in 0..=n {
                v.push((n, k, p));
            }
        }
    }
    v
}

fn su_sets() -> Vec<((usize, usize, usize), OrbitSet)> {
    su_grassmannians()
        .into_iter()
        .map(|(n, k, p)| {
            let set = enumerate_orbits(&FlagType::grassmannian(k, n).unwrap(), &standard_su(p, n - p).unwrap()).unwrap();
            ((n, k, p), set)
        })
        .collect()
}

fn criterion_1(sets: &[((usize, usize, usize), OrbitSet)], secs: f64) -> Outcome {
    let mut o = Outcome::default();
    for ((n, k, p), set) in sets {
        let want = su_count(*n, *k, *p);
        o.check(set.len() == want, || format!("Gr({k},{n}) under SU({p},{}): {} orbits, expected {want}", n - p, set.len()));
    }
    o.check(secs < 60.0, || format!("sweep took {secs:.1}s"));
    o
}

fn criterion_2(sets: &[((usize, usize, usize), OrbitSet)]) -> Outcome {
    let mut o = Outcome::default();
    for ((n, k, p), set) in sets {
        let l = (*p).min(n - p);
        let want = (k + 1).min(l + 1);
        o.check(set.open_count() == want, || format!("Gr({k},{n}) under SU({p},{}): {} open orbits, expected {want}", n - p, set.open_count()));
    }
    o
}

fn criterion_3(sets: &[((usize, usize, usize), OrbitSet)], shared: &mut Shared) -> Outcome {
    let mut o = Outcome::default();
    for ((n, k, p), set) in sets {
        shared.record_set(set);
        let l = (*p).min(n - p);
        let want = (*k).min(l);
        let Some(ci) = set.closed_index() else { continue };
        let c = set.records[ci].invariant.signatures[0].c;
        o.check(c == want, || format!("Gr({k},{n}) under SU({p},{}): closed orbit has c = {c}, expected {want}", n - p));
    }
    o.checks += shared.closed.checks;
    o.failures.extend(shared.closed.failures.iter().cloned());
    o
}

fn criterion_4() -> Outcome {
    let mut o = Outcome::default();
    let opts = EnumerateOptions { dimensions: true, ..EnumerateOptions::default() };
    for (ty, r) in all_contexts(6) {
        let set = enumerate_orbits_with(&ty, &r, &opts).unwrap();
        let cdim = ty.complex_dim();
        for rec in &set.records {
            let d = rec.real_dim.unwrap();
            o.check(d >= cdim, || format!("{}: orbit {} has real dim {d} < {cdim}", set.context(), rec.invariant.label()));
            if rec.is_open {
                o.check(d == 2 * cdim, || format!("{}: open orbit {} has real dim {d}, expected {}", set.context(), rec.invariant.label(), 2 * cdim));
            }
        }
    }
    o
}

fn criterion_5(shared: &mut Shared) -> Outcome {
    let mut o = Outcome::default();
    let mut cases: Vec<(Family, usize, Vec<usize>)> = Vec::new();
    for k in 1..=3 {
        cases.push((Family::Slr, k, (2 * k + 1..=9).step_by(2).collect()));
        cases.push((Family::SuInf, k, (2 * k..=8).step_by(2).collect()));
        for p in 0..=3 {
            cases.push((Family::SuP(p), k, ((p + k.max(p)).max(k + 1)..=8).collect()));
        }
    }
    for k in 1..=4 {
        cases.push((Family::Slh, k, (2 * k + 2..=10).step_by(2).collect()));
    }
    for (family, k, levels) in cases {
        let want = stable_count(family, k);
        for n in levels {
            let set = enumerate_orbits(&FlagType::grassmannian(k, n).unwrap(), &family.structure_at(n).unwrap()).unwrap();
            shared.record_set(&set);
            o.check(set.len() == want, || format!("{family} Gr({k},{n}): {} orbits, expected {want}", set.len()));
        }
    }
    o
}

fn criterion_6(shared: &mut Shared) -> Outcome {
    let mut o = Outcome::default();
    let mut descriptors: Vec<_> = (1..=3).map(FiniteTypeDescriptor::grassmannian).collect();
    descriptors.push(FiniteTypeDescriptor::chain());
    let families = [Family::SuInf, Family::SuP(0), Family::SuP(1), Family::SuP(2), Family::SuP(3), Family::Slr, Family::Slh];
    for d in &descriptors {
        for family in families {
            let ex = ExhaustionSpec::in_range(family, 1, 8).unwrap();
            if !ex.level_dims.iter().any(|&n| d.is_valid_at(n)) {
                continue;
            }
            let (trace, verdict) = trace_counts(d, &ex, &TraceOptions::default()).unwrap();
            shared.record_trace(&trace, &verdict);
            let cert = check_injectivity(&trace);
            o.check(cert.transitions_checked > 0, || format!("{family} {d}: no transitions in range"));
            for t in &trace.transitions {
                let mut targets = t.map.clone();
                targets.sort_unstable();
                targets.dedup();
                o.check(targets.len() == t.map.len(), || format!("{family} {d}: collision in {} -> {}", t.from, t.to));
            }
            o.check(cert.injective, || format!("{family} {d}: certificate reports a collision"));
        }
    }
    o
}

fn criterion_7(shared: &mut Shared) -> Outcome {
    let mut o = Outcome::default();
    let max = 10;
    let families = [Family::SuInf, Family::SuP(0), Family::SuP(1), Family::SuP(2), Family::Slr, Family::Slh];
    for d in ["dims=1", "dims=1,2", "dims=1;codims=1"] {
        let d: FiniteTypeDescriptor = d.parse().unwrap();
        for family in families {
            let ex = ExhaustionSpec::in_range(family, 1, max).unwrap();
            let (trace, verdict) = trace_counts(&d, &ex, &TraceOptions::default()).unwrap();
            shared.record_trace(&trace, &verdict);
            let Some(stab) = verdict.stabilization_level else {
                o.check(false, || format!("{family} {d}: no stabilization up to level {max}"));
                continue;
            };
            o.check(stab <= max, || format!("{family} {d}: stabilization level {stab} exceeds {max}"));
            for (k, t) in trace.transitions.iter().enumerate().filter(|(_, t)| t.from >= stab) {
                let (a, b) = (&trace.levels[k], &trace.levels[k + 1]);
                let m = a.orbits.len();
                let bijective = m == b.orbits.len() && {
                    let mut s = t.map.clone();
                    s.sort_unstable();
                    s == (0..m).collect::<Vec<_>>()
                };
                let order = bijective && (0..m).all(|i| (0..m).all(|j| a.poset.leq(i, j) == b.poset.leq(t.map[i], t.map[j])));
                o.check(order, || format!("{family} {d}: transition {} -> {} is not an order isomorphism", t.from, t.to));
            }
        }
    }
    o
}

fn criterion_8(shared: &mut Shared) -> Outcome {
    let mut o = Outcome::default();
    let d: FiniteTypeDescriptor = "middle=1/2".parse().unwrap();
    let ex = ExhaustionSpec::in_range(Family::Slr, 3, 11).unwrap();
    let (trace, verdict) = trace_counts(&d, &ex, &TraceOptions::default()).unwrap();
    shared.record_trace(&trace, &verdict);
    let levels: Vec<usize> = trace.levels.iter().map(|l| l.n).collect();
    o.check(levels == [3, 5, 7, 9, 11], || format!("levels traced: {levels:?}"));
    for l in &trace.levels {
        let k = l.n / 2;
        o.check(l.orbits.flag_type.d == [k], || format!("level {}: type {}", l.n, l.orbits.flag_type));
        o.check(l.orbits.len() == k + 1, || format!("level {}: {} orbits, expected {}", l.n, l.orbits.len(), k + 1));
    }
    let counts = trace.counts();
    o.check(counts.windows(2).all(|w| w[0] < w[1]), || format!("counts not strictly increasing: {counts:?}"));
    o
}

fn criterion_9() -> Outcome {
    let mut o = Outcome::default();
    let cfg = VerifyConfig { seed: 0, trials: 100, ..VerifyConfig::default() };
    let rep = run_suite(Suite::Invariance, &cfg).unwrap();
    o.checks = rep.checks;
    o.failures = rep.failures.iter().map(|f| f.to_string()).collect();
    o.check(rep.passed && rep.failure_count == 0, || format!("{} invariance failures", rep.failure_count));
    o
}

fn criterion_10(shared: &mut Shared) -> Outcome {
    let mut o = Outcome::default();
    let families = [Family::SuInf, Family::SuP(0), Family::SuP(1), Family::SuP(2), Family::Slr, Family::Slh];
    for d in ["middle=1/2", "middle=1/3", "chain", "dims=2;codims=1"] {
        let d: FiniteTypeDescriptor = d.parse().unwrap();
        for family in families {
            let ex = ExhaustionSpec::in_range(family, 1, 7).unwrap();
            if let Ok((trace, verdict)) = trace_counts(&d, &ex, &TraceOptions::default()) {
                shared.record_trace(&trace, &verdict);
            }
        }
    }
    for (family, d, v) in &shared.verdicts {
        let finite = v.finiteness == Finiteness::Finite;
        match family {
            Family::SuInf | Family::Slr | Family::Slh => {
                let both = v.has_open == Some(true) && v.has_closed == Some(true);
                o.check(both == finite, || format!("{family} {d}: open {:?}, closed {:?}, finite {finite}", v.has_open, v.has_closed));
            }
            Family::SuP(_) => o.check(v.has_open == Some(true), || format!("{family} {d}: has_open {:?}", v.has_open)),
        }
        if *family == Family::Slr {
            o.check(v.has_closed == Some(true), || format!("{family} {d}: has_closed {:?}", v.has_closed));
        }
    }
    o
}

fn report(n: usize, name: &str, o: &Outcome) -> bool {
    let status = if o.passed() { "PASS" } else { "FAIL" };
    println!("criterion {n:>2} {status}  {name} ({} checks, {} failures)", o.checks, o.failures.len());
    for f in o.failures.iter().take(5) {
        println!("    {f}");
    }
    if o.failures.len() > 5 {
        println!("    ... {} more", o.failures.len() - 5);
    }
    o.passed()
}

fn main() -> ExitCode {
    let mut shared = Shared { closed: Outcome::default(), verdicts: Vec::new() };
    let start = Instant::now();
    let sets = su_sets();
    let secs = start.elapsed().as_secs_f64();

    // Contexts from 5 and 6 feed the closed-orbit check of 3.
    let c5 = criterion_5(&mut shared);
    let c6 = criterion_6(&mut shared);
    let c7 = criterion_7(&mut shared);
    let c8 = criterion_8(&mut shared);
    let c10 = criterion_10(&mut shared);
    let results = [
        ("SU grassmannian orbit counts", criterion_1(&sets, secs)),
        ("SU grassmannian open-orbit counts min{k+1, l+1}", criterion_2(&sets)),
        ("unique closed orbit; SU closed nullity c = min{k, l}", criterion_3(&sets, &mut shared)),
        ("orbit dimension bounds, n <= 6", criterion_4()),
        ("stabilized grassmannian counts", c5),
        ("injective transition maps, levels <= 8", c6),
        ("poset stabilization", c7),
        ("SLR middle=1/2 growth", c8),
        ("invariance and completeness probe", criterion_9()),
        ("open and closed verdicts", c10),
    ];
    let mut all = true;
    for (i, (name, o)) in results.iter().enumerate() {
        all &= report(i + 1, name, o);
    }
    println!("acceptance: {}", if all { "all criteria pass" } else { "some criteria fail" });
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
