//! Acceptance suite: one test per criterion, each printing a single
//! `criterion N ...: PASS/FAIL` line (visible with `--nocapture`) before
//! asserting.
//!
//! Criterion 9 (CLI determinism and exit codes) lives in the CLI crate's
//! integration tests.

use mpj_core::connections::ConnectionContext;
use mpj_core::decomposition::{
    build_all_ideals, check_direct, complement_and_decompose, is_root_multiplicative,
    oracle_is_simple, simple_components, simplicity_criterion, verify_ideal_family,
};
use mpj_core::exactlin::intersect;
use mpj_core::families::{generate, Family, Generated};
use mpj_core::rational::{rat, ratio};
use mpj_core::split::{root_decomposition, verify_rootspace_products, verify_split, Root};
use mpj_core::{AlgebraSpec, QVec, Subspace, Tensor3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The bundled families with a suggested MASA each: sl2, abelian 1..5, m7.
fn bundled() -> Vec<Generated> {
    let mut out = vec![generate(Family::LieSl2).unwrap()];
    for n in 1..=5 {
        out.push(generate(Family::Abelian(n)).unwrap());
    }
    out.push(generate(Family::MalcevM7).unwrap());
    out
}

/// Direct sum of two generated algebras, with the block-diagonal MASA.
fn sum_generated(a: &Generated, b: &Generated) -> Generated {
    let algebra = a.algebra.direct_sum(&b.algebra);
    let n1 = a.algebra.dim();
    let n2 = b.algebra.dim();
    let mut rows = Vec::new();
    for v in a.masa.basis() {
        let mut coords = v.coords.clone();
        coords.extend(std::iter::repeat_with(|| rat(0)).take(n2));
        rows.push(QVec { coords });
    }
    for v in b.masa.basis() {
        let mut coords = vec![rat(0); n1];
        coords.extend(v.coords.iter().cloned());
        rows.push(QVec { coords });
    }
    Generated {
        name: format!("{}+{}", a.name, b.name),
        algebra,
        masa: Subspace::span(&rows, n1 + n2),
    }
}

fn report(criterion: &str, ok: bool) {
    println!("criterion {criterion}: {}", if ok { "PASS" } else { "FAIL" });
}

#[test]
fn criterion_1_axiom_suite_and_perturbation_detection() {
    let start = std::time::Instant::now();
    let families = bundled();
    let mut all_axioms = true;
    for g in &families {
        all_axioms &= g.algebra.verify_axioms().all_passed();
    }
    for (i, a) in families.iter().enumerate() {
        for b in families.iter().skip(i) {
            all_axioms &= sum_generated(a, b).algebra.verify_axioms().all_passed();
        }
    }
    // 200 seeded single-entry bracket perturbations of sl2: add a nonzero
    // delta to one constant c[i][j][k] (i < j, mirrored by antisymmetry)
    let sl2 = generate(Family::LieSl2).unwrap().algebra;
    let mut rng = ChaCha8Rng::seed_from_u64(0x6163_6331);
    let mut detected = 0usize;
    let mut preserved: Vec<(usize, usize, usize)> = Vec::new();
    const TRIALS: usize = 200;
    for _ in 0..TRIALS {
        let (i, j) = [(0, 1), (0, 2), (1, 2)][rng.gen_range(0..3)];
        let k = rng.gen_range(0..3);
        let delta = loop {
            let d = ratio(rng.gen_range(-5i64..=5), rng.gen_range(1i64..=3));
            if !mpj_core::rational::is_zero(&d) {
                break d;
            }
        };
        let mut bracket = Tensor3::zero(3);
        let base = sl2.bracket_constants();
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    bracket.set(a, b, c, base.get(a, b, c).clone());
                }
            }
        }
        bracket.set(i, j, k, bracket.get(i, j, k) + &delta);
        bracket.set(j, i, k, bracket.get(j, i, k) - &delta);
        let perturbed = AlgebraSpec::from_dense_unchecked(
            sl2.basis_names().to_vec(),
            bracket,
            Tensor3::zero(3),
        )
        .unwrap();
        if perturbed.verify_axioms().all_passed() {
            if !preserved.contains(&(i, j, k)) {
                preserved.push((i, j, k));
            }
        } else {
            detected += 1;
        }
    }
    let rate = detected as f64 / TRIALS as f64;
    preserved.sort_unstable();
    println!(
        "  perturbation detection rate {detected}/{TRIALS} = {rate:.3}; identity-preserving entry classes (i,j,k): {preserved:?}"
    );
    let elapsed = start.elapsed();
    println!("  runtime {elapsed:?}");
    // NOTE: three of the nine (i,j,k) entry classes of the sl2 bracket can
    // absorb any delta without breaking a single identity — (0,1,2),
    // (0,2,1) and (1,2,0) deform sl2 inside the variety of Lie algebras —
    // so the true detection rate of uniformly drawn single-entry
    // perturbations is 2/3, and the 0.95 threshold below is not attainable
    // by any correct checker. The check is kept at its stated threshold
    // rather than weakened.
    let ok = all_axioms && rate >= 0.95 && elapsed.as_secs() < 10;
    report("1 (axiom suite + perturbation detection >= 0.95)", ok);
    assert!(ok, "detection rate {rate} below the 0.95 threshold");
}

#[test]
fn criterion_2_splitness_exact_root_data() {
    let sl2 = generate(Family::LieSl2).unwrap();
    let rd = root_decomposition(&sl2.algebra, &sl2.masa).unwrap();
    let sl2_ok = rd.roots() == [Root::new(vec![rat(-2)]), Root::new(vec![rat(2)])]
        && rd.roots().iter().all(|r| rd.space_of(r).dim() == 1)
        && rd.zero_space() == rd.h();
    // m7: every ad(h) on the trace-zero split octonions has minimal
    // polynomial x(x^2 - 4n(h)), so a 1-dimensional MASA yields exactly
    // two opposite roots with 3-dimensional root spaces — these are the
    // oracle-derived frozen values
    let m7 = generate(Family::MalcevM7).unwrap();
    let rd7 = root_decomposition(&m7.algebra, &m7.masa).unwrap();
    let m7_ok = rd7.roots() == [Root::new(vec![rat(-2)]), Root::new(vec![rat(2)])]
        && rd7.roots().iter().map(|r| rd7.space_of(r).dim()).collect::<Vec<_>>() == [3, 3]
        && rd7.zero_space() == rd7.h();
    let ok = sl2_ok && m7_ok && verify_split(&rd).h_equals_p0 && verify_split(&rd7).h_equals_p0;
    report("2 (splitness: sl2 dims (1,1); m7 dims (3,3); H = P_0)", ok);
    assert!(ok);
}

#[test]
fn criterion_3_rootspace_product_lemma() {
    let families = bundled();
    let mut ok = true;
    for g in &families {
        let rd = root_decomposition(&g.algebra, &g.masa).unwrap();
        ok &= verify_rootspace_products(&rd).all_passed();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x6c65_6d6d);
    for _ in 0..50 {
        let a = &families[rng.gen_range(0..families.len())];
        let b = &families[rng.gen_range(0..families.len())];
        let s = sum_generated(a, b);
        let rd = root_decomposition(&s.algebra, &s.masa).unwrap();
        if !verify_rootspace_products(&rd).all_passed() {
            println!("  lemma fails on {}", s.name);
            ok = false;
        }
    }
    report("3 (root-space product lemma on families + 50 random sums)", ok);
    assert!(ok);
}

#[test]
fn criterion_4_connection_equivalence() {
    let families = bundled();
    let mut inputs: Vec<Generated> = families.clone();
    inputs.push(sum_generated(&families[0], &families[0]));
    inputs.push(sum_generated(&families[0], &families[6]));
    inputs.push(sum_generated(&families[6], &families[6]));
    let mut ok = true;
    for g in &inputs {
        let rd = root_decomposition(&g.algebra, &g.masa).unwrap();
        let ctx = ConnectionContext::new(rd);
        // partition() machine-checks reflexivity/symmetry/transitivity
        if ctx.partition().is_err() {
            println!("  equivalence violated on {}", g.name);
            ok = false;
            continue;
        }
        for alpha in ctx.rd().roots() {
            let c1 = ctx.connection_class(alpha).unwrap();
            if ctx.rd().is_root(&alpha.neg()) {
                ok &= c1 == ctx.connection_class(&alpha.neg()).unwrap();
            }
            ok &= c1.contains(alpha);
        }
    }
    report("4 (partition is an equivalence; class(α) = class(−α))", ok);
    assert!(ok);
}

#[test]
fn criterion_5_decomposition_theorems() {
    let start = std::time::Instant::now();
    let families = bundled();
    let mut inputs: Vec<Generated> = families.clone();
    for (i, a) in families.iter().enumerate() {
        for b in families.iter().skip(i) {
            inputs.push(sum_generated(a, b));
        }
    }
    let mut ok = true;
    for g in &inputs {
        let rd = root_decomposition(&g.algebra, &g.masa).unwrap();
        let ctx = ConnectionContext::new(rd);
        let ideals = build_all_ideals(&ctx).unwrap();
        if !verify_ideal_family(&ctx, &ideals).iter().all(|c| c.passed) {
            println!("  ideal family fails on {}", g.name);
            ok = false;
        }
        let (_, spans) = complement_and_decompose(&ctx, &ideals).unwrap();
        if !spans.passed {
            println!("  complement does not span on {}", g.name);
            ok = false;
        }
        let direct = check_direct(&ctx, &ideals);
        if direct.center_zero && direct.h_generated {
            let verdict = direct.direct.expect("hypotheses hold");
            if !verdict.passed {
                println!("  directness fails on {}: {:?}", g.name, verdict.witness);
                ok = false;
            }
        }
    }
    let elapsed = start.elapsed();
    println!("  {} inputs, runtime {elapsed:?}", inputs.len());
    let ok = ok && elapsed.as_secs() < 5;
    report("5 (ideal family + complement + directness theorems)", ok);
    assert!(ok);
}

#[test]
fn criterion_6_ideal_closure_lemmas() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x636c_6f73);
    let mut ok = true;
    for g in bundled() {
        let a = &g.algebra;
        let n = a.dim();
        let rd = root_decomposition(a, &g.masa).unwrap();
        let center_zero = a.center().is_zero();
        for _ in 0..100 {
            let dim = rng.gen_range(1..=2usize);
            let rows: Vec<QVec> = (0..dim)
                .map(|_| QVec {
                    coords: (0..n).map(|_| rat(rng.gen_range(-3i64..=3))).collect(),
                })
                .collect();
            let seed = Subspace::span(&rows, n);
            let ideal = a.ideal_closure(&seed).unwrap();
            // Lemma: I = (I ∩ H) ⊕ ⊕(I ∩ P_α), dims add exactly
            let mut total = intersect(&ideal, rd.h()).unwrap().dim();
            for alpha in rd.roots() {
                total += intersect(&ideal, &rd.space_of(alpha)).unwrap().dim();
            }
            if total != ideal.dim() {
                println!("  root-space splitting fails on {} (dims {total} vs {})", g.name, ideal.dim());
                ok = false;
            }
            // Lemma: with Z(P) = 0 no nonzero ideal fits inside H
            if center_zero && !ideal.is_zero() && rd.h().contains_subspace(&ideal) {
                println!("  nonzero ideal inside H on {}", g.name);
                ok = false;
            }
        }
        // the H-seeded case of the second lemma, explicitly
        if center_zero {
            let h_line = Subspace::span(&g.masa.basis()[..1].to_vec(), n);
            let closure = a.ideal_closure(&h_line).unwrap();
            if !closure.is_zero() && rd.h().contains_subspace(&closure) {
                println!("  H-seeded closure stays inside H on {}", g.name);
                ok = false;
            }
        }
    }
    report("6 (ideal-closure lemmas, 100 seeds per family)", ok);
    assert!(ok);
}

#[test]
fn criterion_7_criterion_vs_oracle() {
    let sl2 = generate(Family::LieSl2).unwrap();
    let two = sum_generated(&sl2, &sl2);
    let three = sum_generated(&two, &sl2);
    // jordan_probe has no hits (the probe search is exhaustively empty),
    // so the input set is the sl2 family
    assert!(generate(Family::JordanProbe).is_err());
    let mut ok = true;
    let mut agreements = 0;
    for g in [&sl2, &two, &three] {
        let rd = root_decomposition(&g.algebra, &g.masa).unwrap();
        let ctx = ConnectionContext::new(rd);
        assert!(ctx.rd().is_maximal_length());
        assert!(ctx.rd().is_symmetric());
        assert!(g.algebra.center().is_zero());
        assert!(is_root_multiplicative(&ctx).0);
        let criterion = simplicity_criterion(&ctx).unwrap().is_simple();
        let oracle = oracle_is_simple(&g.algebra, ctx.rd()).unwrap().lattice;
        if criterion == oracle {
            agreements += 1;
        } else {
            println!("  disagreement on {}: criterion {criterion}, oracle {oracle}", g.name);
            ok = false;
        }
    }
    println!("  {agreements}/3 agreements");
    report("7 (simplicity criterion vs brute-force oracle, 100% agreement)", ok);
    assert!(ok);
}

#[test]
fn criterion_8_simple_components_end_to_end() {
    let start = std::time::Instant::now();
    let sl2 = generate(Family::LieSl2).unwrap();
    let mut ok = true;
    for k in [2usize, 3] {
        let mut g = sl2.clone();
        for _ in 1..k {
            g = sum_generated(&g, &sl2);
        }
        let rd = root_decomposition(&g.algebra, &g.masa).unwrap();
        let ctx = ConnectionContext::new(rd);
        let report = simple_components(&ctx).unwrap();
        if report.components.len() != k || !report.all_passed() {
            println!("  {} components (expected {k}) on {}", report.components.len(), g.name);
            ok = false;
        }
        for c in &report.components {
            ok &= c.axioms_pass && c.root_system_matches && c.criterion_simple && c.oracle.lattice;
        }
    }
    let elapsed = start.elapsed();
    println!("  runtime {elapsed:?}");
    let ok = ok && elapsed.as_secs() < 5;
    report("8 (k sl2 copies decompose into k certified simple components)", ok);
    assert!(ok);
}
