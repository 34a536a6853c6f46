//! Acceptance criteria: one PASS/FAIL line each.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use braidkit::braided_space::{BracketMap, BraidedSpace, Marks};
use braidkit::linalg::{Matrix, SVec};
use braidkit::quotients::{
    check_x_primitive, enveloping_algebra, kharchenko_identities, nichols_algebra, symmetric_algebra, theta_map,
    type_one_check,
};
use braidkit::scalars::{q_binom, q_int};
use braidkit::tensor_engine::{graded_primitives, FilteredBialgebra, TruncatedTensorBialgebra};
use braidkit::theorems::{
    verify_bracket_triviality, verify_categorical_rigidity, verify_milnor_moore, verify_strict_symmetric, TheoremReport,
    Verdict,
};
use braidkit::{FieldSpec, Scalar};
use common::{rat, rat_string, Fp};
use num::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

const Q: FieldSpec = FieldSpec::Rationals;

fn dj() -> BraidedSpace {
    BraidedSpace::dj_hecke(Q, 2, &Q.from_i64(2)).unwrap()
}

fn four() -> Scalar {
    Q.from_i64(4)
}

fn check(r: &TheoremReport, name: &str) -> Outcome {
    match r.checks.iter().find(|c| c.name == name) {
        Some(c) if c.verdict == Verdict::Pass => Ok(()),
        Some(c) => Err(format!("{name}: {:?}", c.verdict)),
        None => Err(format!("no check named {name:?}")),
    }
}

/// Braided spaces used as bundled examples.
fn bundled() -> Vec<(&'static str, BraidedSpace)> {
    let f5 = FieldSpec::Prime(5);
    let f8 = FieldSpec::Binary(3);
    vec![
        ("dj_hecke n=2 q=2", dj()),
        ("dj_hecke n=3 q=2", BraidedSpace::dj_hecke(Q, 3, &Q.from_i64(2)).unwrap()),
        ("dj_hecke n=2 q=2 over F5", BraidedSpace::dj_hecke(f5, 2, &f5.from_i64(2)).unwrap()),
        ("flip n=1", BraidedSpace::flip(Q, 1)),
        ("flip n=2", BraidedSpace::flip(Q, 2)),
        ("flip n=3", BraidedSpace::flip(Q, 3)),
        ("flip n=2 over F3", BraidedSpace::flip(FieldSpec::Prime(3), 2)),
        ("flip n=1 over F8", BraidedSpace::flip(f8, 1)),
        ("scalar n=2 mu=-1", BraidedSpace::scalar(Q, 2, &Q.from_i64(-1)).unwrap()),
        (
            "diagonal n=2",
            BraidedSpace::diagonal(
                Q,
                &[vec![Q.from_i64(-1), Q.from_i64(2)], vec![Q.from_ratio(1, 2).unwrap(), Q.from_i64(-1)]],
            )
            .unwrap(),
        ),
    ]
}

fn criterion_1() -> Outcome {
    let two = rat(2);
    let pascal = common::q_binom_pascal(4, 2, &two);
    let product = common::q_binom_product(4, 2, &two).unwrap();
    ensure(pascal == rat(35) && product == rat(35), format!("oracles give {pascal} and {product}"))?;
    let lib = q_binom(4, 2, &Q.from_i64(2)).map_err(|e| e.to_string())?;
    ensure(lib == Q.from_i64(35), format!("q_binom(4,2,2) = {lib}"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2026);
    for trial in 0..200 {
        let n: u32 = rng.gen_range(0..=8);
        let k: u32 = rng.gen_range(0..=n);
        let (field, lambda, expected) = match trial % 3 {
            0 => {
                let l = common::ratio(rng.gen_range(-6..=6), rng.gen_range(1..=4));
                let lambda = Q.parse_scalar(&rat_string(&l)).map_err(|e| e.to_string())?;
                let pascal = common::q_binom_pascal(n, k, &l);
                if let Some(p) = common::q_binom_product(n, k, &l) {
                    ensure(p == pascal, format!("product formula disagrees at ({n},{k},{l})"))?;
                }
                (Q, lambda, Q.parse_scalar(&rat_string(&pascal)).map_err(|e| e.to_string())?)
            }
            t => {
                let p = if t == 1 { 5 } else { 7 };
                let field = FieldSpec::Prime(p);
                let l = Fp::new(rng.gen_range(0..p as i64), p);
                let pascal = common::q_binom_pascal(n, k, &l);
                if let Some(prod) = common::q_binom_product(n, k, &l) {
                    ensure(prod == pascal, format!("product formula disagrees at ({n},{k},{l:?})"))?;
                }
                (field, field.from_i64(l.v as i64), field.from_i64(pascal.v as i64))
            }
        };
        let got = q_binom(n, k, &lambda).map_err(|e| e.to_string())?;
        ensure(got == expected, format!("q_binom({n},{k},{lambda}) over {field} = {got}, oracle {expected}"))?;
        let mirror = q_binom(n, n - k, &lambda).map_err(|e| e.to_string())?;
        ensure(got == mirror, format!("symmetry fails at ({n},{k},{lambda})"))?;
        if n >= 1 && k >= 1 && k < n {
            let a = q_binom(n - 1, k - 1, &lambda).unwrap();
            let b = q_binom(n - 1, k, &lambda).unwrap();
            ensure(got == &a + &(&lambda.pow(k) * &b), format!("Pascal identity fails at ({n},{k},{lambda})"))?;
        }
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    let spaces = [
        ("dj_hecke n=2 q=2", dj()),
        ("flip n=1", BraidedSpace::flip(Q, 1)),
        ("flip n=2", BraidedSpace::flip(Q, 2)),
        ("flip n=3", BraidedSpace::flip(Q, 3)),
    ];
    let families = [
        "unit", "gr1", "gr2", "gr3", "gr4", "gr5", "c1", "c2", "c3", "c4", "c5", "braid", "bialgebra",
    ];
    for (name, space) in spaces {
        let report = TruncatedTensorBialgebra::new(&space, 4).to_bialgebra().validate();
        if let Some(f) = report.failures().next() {
            return Err(format!("{name}: {} in degree {} ({:?})", f.axiom, f.degree, f.witness));
        }
        for family in families {
            let top = report.entries.iter().filter(|e| e.axiom == family).map(|e| e.degree).max();
            ensure(top.is_some(), format!("{name}: axiom {family} never checked"))?;
        }
        let degrees = report.entries.iter().map(|e| e.degree).max().unwrap_or(0);
        ensure(degrees == 4, format!("{name}: checks stop at degree {degrees}"))?;
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    for (name, space) in bundled() {
        let t = TruncatedTensorBialgebra::new(&space, 2).to_bialgebra();
        let lhs = t.comul(1, 1) * t.mul(1, 1);
        let n2 = space.dim() * space.dim();
        let rhs = &Matrix::identity(space.field(), n2) + space.braiding();
        ensure(lhs == rhs, format!("{name}: Δ¹·¹∇¹·¹ ≠ Id + c"))?;
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    let c = common::dj_matrix(2, &rat(2));
    let oracle = common::symmetric_dims(2, &c, &rat(4), 5);
    ensure(oracle == vec![1, 2, 3, 4, 5, 6], format!("oracle dims {oracle:?}"))?;
    let s = symmetric_algebra(&dj(), &four(), 5).map_err(|e| e.to_string())?;
    ensure(s.dims() == oracle, format!("library dims {:?}", s.dims()))
}

fn criterion_5() -> Outcome {
    let s = symmetric_algebra(&dj(), &four(), 4).map_err(|e| e.to_string())?;
    let b = s.bialgebra();
    let oracle: Vec<BigRational> = (1..=3).map(|n| common::q_int(n + 1, &rat(4))).collect();
    ensure(oracle == vec![rat(5), rat(21), rat(85)], format!("oracle scalars {oracle:?}"))?;
    for (n, scalar) in (1..=3).zip(&oracle) {
        let lib = q_int(n as u32 + 1, &four());
        ensure(lib.to_string() == rat_string(scalar), format!("q_int({}, 4) = {lib}", n + 1))?;
        let gamma = b.mul(n, 1) * b.comul(n, 1);
        let expected = Matrix::scalar(Q, b.dim(n + 1), &lib);
        ensure(gamma == expected, format!("Γ_{{{n},1}} ≠ {lib}·Id"))?;
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    let cases = [
        ("dj_hecke n=2 q=2", dj(), four()),
        ("flip n=2", BraidedSpace::flip(Q, 2), Q.one()),
        ("flip n=3", BraidedSpace::flip(Q, 3), Q.one()),
    ];
    for (name, space, lambda) in cases {
        let s = symmetric_algebra(&space, &lambda, 4).map_err(|e| e.to_string())?;
        let dims = graded_primitives(s.bialgebra()).dims();
        let expected: Vec<usize> = (0..=4).map(|d| if d == 1 { space.dim() } else { 0 }).collect();
        ensure(dims == expected, format!("{name}: primitive dims {dims:?}"))?;
        let total = FilteredBialgebra::from_graded(s.bialgebra()).primitives().dim();
        ensure(total == space.dim(), format!("{name}: dim P(S) = {total}"))?;
        let r = verify_strict_symmetric(&space, &lambda, 4);
        ensure(r.passed(), format!("{name}: {}", r.conclusion.detail))?;
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let s = symmetric_algebra(&dj(), &four(), 4).map_err(|e| e.to_string())?;
    let b = nichols_algebra(&dj(), 4).map_err(|e| e.to_string())?;
    ensure(s.dims() == b.dims(), format!("S {:?} vs B {:?}", s.dims(), b.dims()))?;
    ensure(b.ledger().all_pass(), "Nichols quotient ledger fails")
}

fn criterion_8() -> Outcome {
    let s = symmetric_algebra(&dj(), &four(), 4).map_err(|e| e.to_string())?;
    let t = TruncatedTensorBialgebra::new(&dj(), 4).to_bialgebra();
    let on_s = type_one_check(s.bialgebra(), &four(), 4).map_err(|e| e.to_string())?;
    let on_t = type_one_check(&t, &four(), 4).map_err(|e| e.to_string())?;
    ensure(on_s.conditions == [true; 5], format!("S conditions {:?}", on_s.conditions))?;
    ensure(on_t.conditions == [false; 5], format!("T conditions {:?}", on_t.conditions))?;
    ensure(on_s.agree == Some(true) && on_t.agree == Some(true), "ledger does not agree")
}

fn criterion_9() -> Outcome {
    for (name, space) in bundled() {
        let field = space.field();
        let marks = match space.hecke_analysis().marks {
            Marks::All => vec![field.one()],
            Marks::Finite(m) => m,
        };
        for lambda in marks {
            let zero = BracketMap::zero(field, space.dim());
            ensure(check_x_primitive(&space, &lambda, &zero), format!("{name}, λ = {lambda}"))?;
        }
    }
    let (space, lambda, b) = masuoka();
    ensure(check_x_primitive(&space, &lambda, &b), "Masuoka triple")
}

fn masuoka() -> (BraidedSpace, Scalar, BracketMap) {
    let f8 = FieldSpec::Binary(3);
    let g = f8.generator().unwrap();
    let b = BracketMap::from_flat(f8, 1, &[f8.one()]).unwrap();
    (BraidedSpace::flip(f8, 1), g, b)
}

fn criterion_10() -> Outcome {
    let (space, lambda, b) = masuoka();
    let f8 = space.field();
    ensure(!b.is_zero(), "b = 0")?;
    let u = enveloping_algebra(&space, &lambda, &b, 3, 5).map_err(|e| e.to_string())?;
    ensure(u.dims() == vec![1, 2, 2, 2], format!("U dims {:?}", u.dims()))?;
    ensure(u.all_stable(), "closure not stable")?;
    ensure(u.iota_injective(), "ι not injective")?;

    // (1 - λ) x² = a x in U, with a = b(x ⊗ x)
    let w = u.to_filtered_bialgebra();
    let x = w.quotient().project(&SVec::unit(1, f8));
    let xx = w.mul(&x, &x).map_err(|e| e.to_string())?;
    let lhs = xx.scale(&(&f8.one() - &lambda));
    let rhs = x.scale(&b.matrix().get(0, 0));
    ensure(lhs == rhs, format!("(1-λ)x² = {lhs:?}, a x = {rhs:?}"))?;

    let r = verify_bracket_triviality(&space, &lambda, Some(&b));
    let char_hyp = r.hypotheses.iter().find(|h| h.name == "characteristic not 2");
    ensure(
        char_hyp.is_some_and(|h| h.verdict == Verdict::Fail && h.witness.as_deref() == Some("char 2")),
        format!("hypotheses {:?}", r.hypotheses),
    )?;
    ensure(r.conclusion.verdict == Verdict::NotAsserted, "conclusion asserted despite char 2")
}

fn criterion_11() -> Outcome {
    let oracle = common::compatible_bracket_dim(2, &common::dj_matrix(2, &rat(2)), &rat(1));
    let space = dj().solve_compatible_brackets();
    ensure(space.dim() == oracle, format!("compatible brackets: library {} vs oracle {oracle}", space.dim()))?;
    let r = verify_bracket_triviality(&dj(), &four(), None);
    ensure(r.passed(), r.conclusion.detail.clone())?;
    ensure(r.vacuous == (oracle == 0), "vacuity flag wrong")?;
    check(&r, "R = Ker(c + Id)")?;
    check(&r, "Im zeta = (R⊗V) ∩ (V⊗R)")?;
    check(&r, "zeta factorizations agree")
}

fn criterion_12() -> Outcome {
    let flip = BraidedSpace::flip(Q, 3);
    let sl2 = BracketMap::sl2(Q);
    let kh = kharchenko_identities(&flip, &sl2);
    ensure(kh.holds, format!("Kharchenko identities fail at {:?}", kh.witness))?;
    let oracle = common::symmetric_dims(3, &common::flip_matrix(3, &rat(1)), &rat(1), 3);
    ensure(oracle == vec![1, 3, 6, 10], format!("oracle S dims {oracle:?}"))?;
    let u = enveloping_algebra(&flip, &Q.one(), &sl2, 3, 5).map_err(|e| e.to_string())?;
    ensure(u.all_stable(), "closure not stable")?;
    let theta = theta_map(&u).map_err(|e| e.to_string())?;
    ensure(theta.gr_dims == oracle, format!("gr'U dims {:?}", theta.gr_dims))?;
    ensure(theta.s_dims == oracle, format!("S dims {:?}", theta.s_dims))?;
    ensure(theta.isomorphism, format!("θ ranks {:?}", theta.ranks))
}

fn criterion_13() -> Outcome {
    let f5 = FieldSpec::Prime(5);
    let oracle = common::categorical_subspaces_f_p_dim2(&common::dj_matrix(2, &Fp::new(2, 5)), 5);
    ensure(oracle == vec![0, 2], format!("oracle categorical dims {oracle:?}"))?;
    let space = BraidedSpace::dj_hecke(f5, 2, &f5.from_i64(2)).unwrap();
    let start = Instant::now();
    let r = verify_categorical_rigidity(&space, &f5.from_i64(4));
    let elapsed = start.elapsed();
    ensure(r.passed(), r.conclusion.detail.clone())?;
    let found = space.enumerate_categorical(&Default::default()).map_err(|e| e.to_string())?;
    let mut dims: Vec<usize> = found.iter().map(|l| l.dim()).collect();
    dims.sort();
    ensure(dims == oracle, format!("library categorical dims {dims:?}"))?;
    ensure(elapsed < Duration::from_secs(1), format!("took {elapsed:?}"))
}

fn criterion_14() -> Outcome {
    let s = symmetric_algebra(&dj(), &four(), 4).map_err(|e| e.to_string())?;
    let r = verify_milnor_moore(&FilteredBialgebra::from_graded(s.bialgebra()), None);
    ensure(r.passed(), r.conclusion.detail.clone())?;
    ensure(r.cutoff == Some(4), "cutoff not recorded")?;
    for name in [
        "lambda = 4",
        "c_P is Hecke of mark lambda",
        "b_P = 0",
        "canonical map kills the relations of S(P, c_P)",
        "canonical map is injective",
        "canonical map sends level n onto C_n",
        "canonical map is a coalgebra map",
    ] {
        check(&r, name)?;
    }
    let t = TruncatedTensorBialgebra::new(&dj(), 4).to_bialgebra();
    let neg = verify_milnor_moore(&FilteredBialgebra::from_graded(&t), None);
    ensure(neg.conclusion.verdict == Verdict::NotAsserted, "negative control asserted")?;
    ensure(
        neg.conclusion.detail.contains("not infinitesimally cocommutative"),
        neg.conclusion.detail.clone(),
    )
}

fn criterion_15() -> Outcome {
    let n = 4;
    let cases: Vec<(&str, BraidedSpace, Scalar, Vec<usize>)> = vec![
        ("dj_hecke n=2 q=2", dj(), four(), common::symmetric_dims(2, &common::dj_matrix(2, &rat(2)), &rat(4), n)),
        ("flip n=2", BraidedSpace::flip(Q, 2), Q.one(), common::symmetric_dims(2, &common::flip_matrix(2, &rat(1)), &rat(1), n)),
        ("flip n=3", BraidedSpace::flip(Q, 3), Q.one(), common::symmetric_dims(3, &common::flip_matrix(3, &rat(1)), &rat(1), n)),
    ];
    for (name, space, lambda, s_dims) in cases {
        let zero = BracketMap::zero(Q, space.dim());
        let u = enveloping_algebra(&space, &lambda, &zero, n, n).map_err(|e| e.to_string())?;
        ensure(u.stable().iter().all(|&s| s) && u.stable().len() == n + 1, format!("{name}: {:?}", u.stable()))?;
        let mut running = 0;
        let expected: Vec<usize> = s_dims
            .iter()
            .enumerate()
            .map(|(d, s)| {
                running += space.dim().pow(d as u32) - s;
                running
            })
            .collect();
        ensure(u.ideal_dims() == expected, format!("{name}: ideal dims {:?} vs {expected:?}", u.ideal_dims()))?;
    }

    let run = || {
        Command::new(env!("CARGO_BIN_EXE_braidkit"))
            .args(["verify", "all", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(a.status.success(), format!("verify all exited {:?}", a.status.code()))?;
    ensure(!a.stdout.is_empty() && a.stdout == b.stdout, "verify all output differs between runs")
}

fn main() {
    let criteria: [Criterion; 15] = [
        ("q-binomials: Pascal, product formula, 200 seeded triples", criterion_1),
        ("tensor bialgebra axioms through degree 4", criterion_2),
        ("Δ¹·¹∇¹·¹ = Id + c on bundled examples", criterion_3),
        ("symmetric algebra dims against brute-force ranks", criterion_4),
        ("Γ ladder scalars 5, 21, 85", criterion_5),
        ("primitives of S are S¹", criterion_6),
        ("Nichols dims equal symmetric dims", criterion_7),
        ("type one ledger agrees on S and on T", criterion_8),
        ("X-primitivity", criterion_9),
        ("Masuoka example over F8", criterion_10),
        ("bracket triviality for dj_hecke q=2", criterion_11),
        ("PBW for the sl2 bracket", criterion_12),
        ("categorical rigidity over F5", criterion_13),
        ("Milnor-Moore reconstruction and negative control", criterion_14),
        ("filtration honesty and determinism", criterion_15),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(()) => println!("PASS {:>2}. {name}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2}. {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
