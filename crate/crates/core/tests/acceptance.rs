//! Acceptance criteria. Prints one PASS/FAIL line per criterion, with the
//! failing sub-checks underneath, and exits nonzero if any criterion fails.

#![allow(clippy::manual_div_ceil)]

use std::time::Instant;

use adesign::algebra::{cyclotomic_number, prime_power, FieldPlane, FiniteField};
use adesign::bounds;
use adesign::builders::{self, ConstructionReport};
use adesign::graphs::{self, complement_graph};
use adesign::incidence::{IncidenceStructure, MatrixVerdict, Verdict};
use adesign::setdiff::{same_class_set, mixed_class_set, is_partial_difference_set};
use adesign::IntMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Default)]
struct Criterion {
    failures: Vec<String>,
    checks: usize,
}

impl Criterion {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        self.checks += 1;
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn verdict(&mut self, r: &ConstructionReport, t: usize, kind: Verdict, lambda: u64) {
        let c = r.classification(t).expect("classified");
        self.check(
            c.verdict == kind && c.lambda == Some(lambda),
            format!(
                "{} t={t}: expected {kind:?} λ={lambda}, found {}",
                r.name,
                c.summary()
            ),
        );
    }
}

fn field(q: u64) -> FiniteField {
    FiniteField::with_order(q).unwrap()
}

fn paley(q: u64) -> IntMatrix {
    graphs::paley_graph(&field(q)).unwrap()
}

fn drt(q: u64) -> IntMatrix {
    graphs::paley_tournament(&field(q)).unwrap()
}

fn c1(c: &mut Criterion, built: &mut Vec<ConstructionReport>) {
    let start = Instant::now();
    for q in [13u64, 17, 25] {
        let r = builders::paley_union(&paley(q)).unwrap();
        c.verdict(&r, 2, Verdict::Design, (q - 3) / 2);
        c.verdict(&r, 3, Verdict::Adesign, (q - 9) / 4);
        c.check(
            r.structure.b() as u64 == 2 * q,
            format!("q={q}: b={}", r.structure.b()),
        );
        built.push(r);
    }
    let secs = start.elapsed().as_secs_f64();
    c.check(secs < 5.0, format!("runtime {secs:.2}s"));
}

fn c2(c: &mut Criterion, built: &mut Vec<ConstructionReport>) {
    for q in [7u64, 11, 19] {
        let r = builders::tournament_union(&drt(q)).unwrap();
        c.verdict(&r, 2, Verdict::Design, (q - 3) / 2);
        c.verdict(&r, 3, Verdict::Adesign, (q - 7) / 4);
        built.push(r);
        let r = builders::tournament_union_complementary(&drt(q)).unwrap();
        c.verdict(&r, 2, Verdict::Design, (q + 1) / 2);
        c.verdict(&r, 3, Verdict::Adesign, (q - 3) / 4);
        built.push(r);
    }
    // The complementary Paley union needs q = 1 mod 4, so it runs at the
    // criterion-1 orders. Its 3-level block size is (n+1)/2, not (n-1)/2.
    for q in [13u64, 17, 25] {
        let r = builders::paley_union_complementary(&paley(q)).unwrap();
        c.check(
            r.verified_ok(),
            format!("paley-union-comp q={q}: {:?}", r.mismatches()),
        );
        c.verdict(&r, 3, Verdict::Adesign, (q - 1) / 4);
        let k3 = r.classification(3).unwrap().k;
        c.check(
            k3 == Some((q as usize + 1) / 2),
            format!("q={q}: 3-level k={k3:?}"),
        );
        let printed_k = r
            .claims
            .iter()
            .find(|cl| cl.t == 3 && !cl.asserted)
            .map(|cl| cl.k);
        c.check(
            printed_k == Some((q as usize - 1) / 2),
            "printed block size is recorded",
        );
        built.push(r);
    }
}

fn c3(c: &mut Criterion, built: &mut Vec<ConstructionReport>) {
    let r = builders::class_pair_union(5, false).unwrap();
    c.verdict(&r, 2, Verdict::Adesign, 4);
    c.check(r.structure.b() == 50, format!("b={}", r.structure.b()));
    c.check(r.classification(2).unwrap().k == Some(8), "k=8");
    let keys: Vec<u64> = r
        .classification(2)
        .unwrap()
        .histogram
        .keys()
        .copied()
        .collect();
    c.check(keys == [4, 5], format!("pair histogram values {keys:?}"));
    built.push(r);
    let r = builders::class_pair_union(5, true).unwrap();
    let got = r.classification(2).unwrap();
    c.check(
        got.verdict == Verdict::Adesign && got.k == Some(18) && got.lambda == Some(22),
        format!(
            "complementary variant: expected 2-(25,18,22) adesign, found k={:?} {}",
            got.k,
            got.summary()
        ),
    );
    built.push(r);
}

fn c4(c: &mut Criterion, built: &mut Vec<ConstructionReport>) {
    for q in [3u64, 5, 7] {
        let r = builders::contraction_minimal_covering(q).unwrap();
        let b = r.structure.b() as u64;
        let v = q * q - 1;
        let h = bounds::horsley_covering(v, v / 2, v / 4)
            .unwrap()
            .map(|h| h.value);
        c.check(b == q * q + 1, format!("q={q}: b={b}"));
        c.check(
            h == Some(b),
            format!("q={q}: horsley covering {h:?}, b={b}"),
        );
        c.check(r.verified_ok(), format!("q={q}: {:?}", r.mismatches()));
        built.push(r);
    }
}

fn c5(c: &mut Criterion, built: &mut Vec<ConstructionReport>) {
    let r = builders::derived_at_infinity(&paley(13), 0).unwrap();
    let j = bounds::johnson(7u64, 3, 2).unwrap();
    c.check(r.structure.b() == 12, format!("b={}", r.structure.b()));
    c.check(
        j == 14 && r.structure.b() as u64 == j - 2,
        format!("johnson(7,3,2)={j}"),
    );
    c.verdict(&r, 2, Verdict::Adesign, 1);
    built.push(r);
}

fn c6(c: &mut Criterion, built: &mut Vec<ConstructionReport>) {
    for n in [5usize, 7, 9, 15] {
        let r = builders::bose_modified(n).unwrap();
        c.verdict(&r, 2, Verdict::Adesign, 1);
        c.check(
            r.structure.b() == 3 * n * n - 2 * n,
            format!("n={n}: b={}", r.structure.b()),
        );
        let h = &r.classification(2).unwrap().histogram;
        c.check(
            h.keys().all(|x| [1, 2].contains(x)),
            format!("n={n}: values {:?}", h.keys()),
        );
        built.push(r);
    }
}

fn c7(c: &mut Criterion, built: &mut Vec<ConstructionReport>) {
    for n in [9u64, 15] {
        let r = builders::pair_union_counterexample(n as usize).unwrap();
        c.verdict(&r, 2, Verdict::Design, n);
        let c3 = r.classification(3).unwrap();
        c.check(
            c3.verdict == Verdict::Neither,
            format!("n={n}: t=3 {}", c3.summary()),
        );
        let lp = r.classification(2).unwrap().lambda.unwrap();
        let f = bounds::feasibility(n, 4, 2, 2).unwrap();
        let floor = (num_rational::Ratio::from_integer(lp) * f.ratio)
            .floor()
            .to_integer();
        c.check(
            floor == 2 && f.floor_identity(lp),
            format!("n={n}: floor {floor}"),
        );
        c.check(
            f.block_count_strictly_inside(r.structure.b() as u64),
            format!(
                "n={n}: b={} outside ({}, {})",
                r.structure.b(),
                f.block_low,
                f.block_high
            ),
        );
        built.push(r);
    }
}

fn c8(c: &mut Criterion) {
    let mut classes = [0, 0];
    for q in (3..=49u64).step_by(2).filter(|&q| prime_power(q).is_some()) {
        let f = field(q);
        let n = |i, j| cyclotomic_number(&f, 2, i, j).unwrap();
        let got = [n(0, 0), n(0, 1), n(1, 0), n(1, 1)];
        let want = if q % 4 == 1 {
            classes[0] += 1;
            [(q - 5) / 4, (q - 1) / 4, (q - 1) / 4, (q - 1) / 4]
        } else {
            classes[1] += 1;
            [(q - 3) / 4, (q + 1) / 4, (q - 3) / 4, (q - 3) / 4]
        };
        c.check(got == want, format!("q={q}: {got:?} vs {want:?}"));
    }
    c.check(
        classes[0] > 0 && classes[1] > 0,
        "both residue classes covered",
    );
    for q in [3u64, 5, 7, 9] {
        let plane = FieldPlane::new(field(q));
        let want = (
            q * q,
            (q - 1) * (q - 1) / 2,
            ((q - 2) * (q - 2) + 3) / 4,
            ((q - 2) * (q - 2) - 1) / 4,
        );
        for (name, d) in [("D", same_class_set(&plane)), ("D~", mixed_class_set(&plane))] {
            let p = is_partial_difference_set(&d);
            let got = p.map(|p| (p.v, p.k, p.lambda, p.mu));
            c.check(
                got == Some(want),
                format!("q={q} {name}: {got:?} vs {want:?}"),
            );
        }
    }
}

/// Whether the matrix identities say the same as classify at t = 2.
fn matrix_agrees(s: &IncidenceStructure) -> Result<(), String> {
    let c = s.classify(2).map_err(|e| e.to_string())?;
    let d = s.check_design_matrix_identity();
    let a = s.check_adesign_matrix_identity();
    let reps: std::collections::BTreeSet<u64> =
        (0..s.v()).map(|p| s.replication(&[p]).unwrap()).collect();
    let constant_r = reps.len() == 1;
    let ok = match c.verdict {
        Verdict::Design => {
            matches!(d, MatrixVerdict::Holds { lambda, .. } if Some(lambda) == c.lambda)
                && !a.holds()
        }
        Verdict::Adesign if constant_r => {
            matches!(a, MatrixVerdict::Holds { lambda, .. } if Some(lambda) == c.lambda)
                && !d.holds()
        }
        Verdict::Adesign => a == MatrixVerdict::NonConstantReplication && d == a,
        _ => !d.holds() && !a.holds(),
    };
    if ok {
        Ok(())
    } else {
        Err(format!(
            "classify {} vs design {d:?}, adesign {a:?}",
            c.summary()
        ))
    }
}

fn srg_identity(a: &IntMatrix) -> bool {
    let Ok(Some(p)) = graphs::is_srg(a) else {
        return false;
    };
    let n = a.rows();
    let (k, l, m) = (p.k as i64, p.lambda as i64, p.mu as i64);
    let sq = a.checked_mul(a).unwrap();
    let j = IntMatrix::ones(n, n);
    let i = IntMatrix::identity(n);
    let rest = &(&j - &i) - a;
    sq == &(&i.scale(k) + &a.scale(l)) + &rest.scale(m)
}

fn drt_identity(a: &IntMatrix) -> bool {
    let n = a.rows();
    let j = IntMatrix::ones(n, n);
    let i = IntMatrix::identity(n);
    let s = &(&a.scale(2) + &i) - &j;
    s.checked_mul(&s.transpose()).unwrap() == &i.scale(n as i64) - &j
}

fn c9(c: &mut Criterion, built: &[ConstructionReport]) {
    for r in built {
        let mut all = vec![r];
        if let Some(p) = &r.parent {
            all.push(p);
        }
        for r in all {
            if let Err(e) = matrix_agrees(&r.structure) {
                c.check(false, format!("{}: {e}", r.name));
            } else {
                c.check(true, "");
            }
        }
    }
    for q in [5u64, 9, 13, 17, 25] {
        let a = paley(q);
        c.check(srg_identity(&a), format!("Paley({q})"));
        c.check(
            srg_identity(&complement_graph(&a).unwrap()),
            format!("complement of Paley({q})"),
        );
    }
    let rook = graphs::latin_square_graph(&field(5), 2).unwrap();
    c.check(
        srg_identity(&complement_graph(&rook).unwrap()),
        "complement of L_2(5)",
    );
    let (a, a2, _) = builders::class_pair(5).unwrap();
    c.check(
        srg_identity(&a) && srg_identity(&a2),
        "class pair at q=5",
    );
    for q in [7u64, 11, 19] {
        c.check(drt_identity(&drt(q)), format!("DRT({q})"));
    }
}

/// Pair and triple counts straight from the definition.
fn naive_histogram(
    v: usize,
    blocks: &[Vec<usize>],
    t: usize,
) -> std::collections::BTreeMap<u64, u64> {
    let mut h = std::collections::BTreeMap::new();
    let mut subset: Vec<usize> = (0..t).collect();
    loop {
        let r = blocks
            .iter()
            .filter(|b| subset.iter().all(|x| b.contains(x)))
            .count() as u64;
        *h.entry(r).or_insert(0) += 1;
        let Some(i) = (0..t).rev().find(|&i| subset[i] < v - t + i) else {
            break;
        };
        subset[i] += 1;
        for j in i + 1..t {
            subset[j] = subset[j - 1] + 1;
        }
    }
    h
}

fn c10(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_101);
    for trial in 0..200 {
        let v = rng.gen_range(4..=15usize);
        let k = rng.gen_range(3..=v.min(7));
        let b = rng.gen_range(1..=40usize);
        let blocks: Vec<Vec<usize>> = (0..b)
            .map(|_| rand::seq::index::sample(&mut rng, v, k).into_vec())
            .collect();
        let s = IncidenceStructure::from_blocks(v, blocks, true).unwrap();
        for t in [2, 3] {
            let fast = s.classify(t).unwrap();
            let naive = naive_histogram(v, s.blocks(), t);
            let lo = *naive.keys().next().unwrap();
            let hi = *naive.keys().last().unwrap();
            let verdict = match hi - lo {
                0 => Verdict::Design,
                1 => Verdict::Adesign,
                _ => Verdict::Neither,
            };
            c.check(
                fast.histogram == naive
                    && fast.verdict == verdict
                    && fast.r_min == Some(lo)
                    && fast.r_max == Some(hi),
                format!("trial {trial} t={t}: {} vs naive {naive:?}", fast.summary()),
            );
        }
    }
}

fn main() {
    let mut built = Vec::new();
    let mut results: Vec<(&str, Criterion)> = Vec::new();
    macro_rules! run {
        ($label:expr, $f:expr) => {{
            let mut c = Criterion::default();
            $f(&mut c);
            results.push(($label, c));
        }};
    }
    run!("1 paley-union at q=13,17,25", |c: &mut Criterion| c1(
        c, &mut built
    ));
    run!(
        "2 tournament unions and complementary unions",
        |c: &mut Criterion| c2(c, &mut built)
    );
    run!(
        "3 pair union over the class pair",
        |c: &mut Criterion| c3(c, &mut built)
    );
    run!("4 minimal covering by contraction", |c: &mut Criterion| c4(
        c, &mut built
    ));
    run!(
        "5 derived structure two blocks short",
        |c: &mut Criterion| c5(c, &mut built)
    );
    run!("6 modified Bose triple systems", |c: &mut Criterion| c6(
        c, &mut built
    ));
    run!("7 pair-union counterexample", |c: &mut Criterion| c7(
        c, &mut built
    ));
    run!("8 cyclotomic closed forms and PDS values", c8);
    run!(
        "9 matrix identities agree with classify",
        |c: &mut Criterion| c9(c, &built)
    );
    run!("10 classify equals the naive oracle", c10);

    let mut failed = 0;
    for (label, c) in &results {
        let status = if c.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!("{status} criterion {label} ({} checks)", c.checks);
        for f in &c.failures {
            println!("     - {f}");
        }
        failed += usize::from(!c.failures.is_empty());
    }
    println!(
        "{} of {} criteria pass",
        results.len() - failed,
        results.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
