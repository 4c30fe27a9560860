//! Acceptance criteria 1 to 13. Each test prints one `PASS criterion k: ...`
//! or `FAIL criterion k: ...` line; run with `--nocapture` to see them.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use hombrax_core::braid::{
    all_permutations, all_reduced_words, alpha_n, chi, reduced_word, tensor_power_solution,
    theta_operator, word_operator, Permutation,
};
use hombrax_core::homlie::{
    braiding_inverse_on_extension, braiding_on_extension, classify_heisenberg_finite_field,
    classify_sl2_finite_field, classify_sl2_star_finite_field, conjugacy_obstruction, extend_alpha,
    heisenberg, heisenberg_morphism, hom_jacobi_residual, is_hom_lie_isomorphism,
    multiplicativity_residual, sl2, sl2_morphism, sl2_star, sl2_star_morphism, yau_twist,
    HomLieAlgebra, LieAlgebra,
};
use hombrax_core::hybe::{
    braid_relation_residuals, build_bi, compatibility_residual, hybe_residual, twist, ybe_residual,
};
use hombrax_core::quantum::{
    bql, check_compatible, enumerate_patterns, induced_solution, maximal_patterns, phi, phi_shapes,
    phi_space, scan_compatible, CompatibleAlpha,
};
use hombrax_core::scalars::{assignment, rat, Assignment, Rational};
use hombrax_core::yd::{
    check_colinearity, check_linearity, comodule_from_qt, dqt_braiding, graded_comodule,
    graded_module, group_bialgebra, module_from_dqt, qt_braiding, sign_bicharacter, sign_module,
    trivial_dqt, trivial_module, trivial_qt, yd_braiding, yd_condition_residual, YdModule,
};
use hombrax_core::{LinearMap, Scalar, TensorOp};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Largest number of nonzero entries a residual may have. Every identity
/// here is exact, so nothing is tolerated.
const MAX_RESIDUAL_NNZ: usize = 0;

const SEED: u64 = 0x5eed_0bad_cafe;

fn report(k: usize, what: &str, budget: Duration, run: impl FnOnce() -> Result<String, String>) {
    let start = Instant::now();
    let outcome = run();
    let elapsed = start.elapsed();
    let outcome = outcome.and_then(|s| {
        if elapsed <= budget {
            Ok(s)
        } else {
            Err(format!("took {elapsed:.2?}, budget {budget:?}"))
        }
    });
    match outcome {
        Ok(detail) => println!("PASS criterion {k}: {what}; {detail} ({elapsed:.2?})"),
        Err(detail) => {
            println!("FAIL criterion {k}: {what}; {detail}");
            panic!("criterion {k} failed: {detail}");
        }
    }
}

fn vanishes(name: &str, r: &TensorOp) -> Result<(), String> {
    if r.nnz() <= MAX_RESIDUAL_NNZ {
        Ok(())
    } else {
        Err(format!("{name}: {} nonzero residual entries", r.nnz()))
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn at(q: Rational, l: Rational) -> Assignment {
    assignment(&[("q", q), ("l", l)])
}

fn rand_rat(rng: &mut StdRng) -> Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

fn rand_nonzero(rng: &mut StdRng) -> Rational {
    loop {
        let r = rand_rat(rng);
        if r != rat(0, 1) {
            return r;
        }
    }
}

fn s(r: Rational) -> Scalar {
    Scalar::from_rational(r)
}

fn diag2(a: i64, d: i64) -> LinearMap {
    LinearMap::diagonal(phi_space(), vec![Scalar::from_int(a), Scalar::from_int(d)])
}

/// `(α^{⊗2}Φ, α)` at `q = 2, λ = 3`, `α = diag(2, -1)`: not symmetric under the flip.
fn numeric_phi_pair() -> (TensorOp, LinearMap) {
    let b = phi().instantiate(&at(rat(2, 1), rat(3, 1))).unwrap();
    let a = diag2(2, -1);
    (twist(&b, &a).unwrap(), a)
}

fn sl2_instance(rng: &mut StdRng, kind: u8) -> LinearMap {
    loop {
        let (a, b, c) = (rand_rat(rng), rand_nonzero(rng), rand_rat(rng));
        let (a, c) = match kind {
            1 => (rat(0, 1), c),
            2 => (a, rat(0, 1)),
            _ => (if a == rat(0, 1) { rat(1, 1) } else { a }, c),
        };
        if let Ok(m) = sl2_morphism(kind, &a, &b, &c) {
            return m;
        }
    }
}

fn heisenberg_instance(rng: &mut StdRng) -> LinearMap {
    let p: Vec<Scalar> = (0..6).map(|_| s(rand_rat(rng))).collect();
    heisenberg_morphism(&p[0], &p[1], &p[2], &p[3], &p[4], &p[5])
}

fn sl2_star_instance(rng: &mut StdRng, kind: u8) -> LinearMap {
    loop {
        let n = if kind == 1 { 6 } else { 3 };
        let p: Vec<Scalar> = (0..n).map(|_| s(rand_rat(rng))).collect();
        if let Ok(m) = sl2_star_morphism(kind, &p) {
            return m;
        }
    }
}

fn invertible(m: &LinearMap) -> bool {
    !m.determinant().is_zero()
}

fn hom_lie_is_exact(l: &HomLieAlgebra) -> bool {
    multiplicativity_residual(l.bracket(), l.alpha())
        .iter()
        .all(|(_, v)| v.iter().all(Scalar::is_zero))
        && hom_jacobi_residual(l)
            .iter()
            .all(|(_, v)| v.iter().all(Scalar::is_zero))
}

#[test]
fn criterion_01_symbolic_ybe() {
    report(
        1,
        "YBE residual of Φ and of B_{q,λ} for N = 2, 3, 4 is zero",
        Duration::from_secs(4),
        || {
            vanishes("Φ", &ybe_residual(&phi()).map_err(e)?)?;
            for n in 2..=4 {
                vanishes(
                    &format!("B N={n}"),
                    &ybe_residual(&bql(n).map_err(e)?).map_err(e)?,
                )?;
            }
            Ok("4 operators".into())
        },
    );
}

#[test]
fn criterion_02_phi_compatible_shapes() {
    report(
        2,
        "exactly the three shapes are compatible with Φ",
        Duration::from_secs(1),
        || {
            let names = [["a", "b"], ["c", "d"]];
            let flip = LinearMap::from_rationals(
                phi_space(),
                &[vec![rat(0, 1), rat(1, 1)], vec![rat(1, 1), rat(0, 1)]],
            )
            .map_err(e)?;
            let mut accepted = Vec::new();
            for mask in 0u8..16 {
                let m: Vec<Vec<Scalar>> = (0..2)
                    .map(|r| {
                        (0..2)
                            .map(|c| {
                                if mask >> (2 * r + c) & 1 == 1 {
                                    Scalar::var(names[r][c])
                                } else {
                                    Scalar::zero()
                                }
                            })
                            .collect()
                    })
                    .collect();
                let a = LinearMap::new(phi_space(), m).map_err(e)?;
                let by_residual = compatibility_residual(&phi(), &a).map_err(e)?.is_zero();
                let swapped = flip.compose(&a).map_err(e)?.compose(&flip).map_err(e)?;
                ensure(by_residual == check_compatible(&swapped), || {
                    format!("support mask {mask:04b}: residual and pattern test disagree")
                })?;
                if by_residual {
                    accepted.push(mask);
                }
            }
            let maximal: BTreeSet<u8> = accepted
                .iter()
                .copied()
                .filter(|&m| !accepted.iter().any(|&o| o != m && o & m == m))
                .collect();
            // b alone, c alone, a and d
            ensure(maximal == BTreeSet::from([0b0010, 0b0100, 0b1001]), || {
                format!("maximal supports {maximal:?}")
            })?;
            for shape in phi_shapes() {
                vanishes(
                    "HYBE of Φ_α",
                    &hybe_residual(&twist(&phi(), &shape).map_err(e)?, &shape).map_err(e)?,
                )?;
            }
            let b = phi().instantiate(&at(rat(2, 1), rat(3, 1))).map_err(e)?;
            for (a, d, inv) in [
                (2, -1, true),
                (1, 5, true),
                (0, 3, false),
                (4, 0, false),
                (0, 0, false),
            ] {
                let al = diag2(a, d);
                let got = twist(&b, &al).map_err(e)?.invert().is_ok();
                ensure(got == inv, || format!("diag({a},{d}) invertibility {got}"))?;
            }
            Ok(format!("{} compatible supports, 3 maximal", accepted.len()))
        },
    );
}

#[test]
fn criterion_03_pattern_oracle() {
    report(
        3,
        "pattern accept set equals brute force over F_5 (q=2, λ=1)",
        Duration::from_secs(120),
        || {
            let mut counts = Vec::new();
            for (n, expected) in [(2usize, 33u64), (3, 245)] {
                let scan = scan_compatible(n, 5, &rat(2, 1), &rat(1, 1), None).map_err(e)?;
                ensure(scan.agrees(), || {
                    format!(
                        "N={n}: {} residual-only, {} pattern-only",
                        scan.residual_only, scan.pattern_only
                    )
                })?;
                ensure(scan.residual_accepts == expected, || {
                    format!("N={n}: {} accepts", scan.residual_accepts)
                })?;
                ensure(scan.scanned == 5u64.pow((n * n) as u32), || {
                    format!("N={n}: scanned {}", scan.scanned)
                })?;
                counts.push(format!("N={n}: {}/{}", scan.residual_accepts, scan.scanned));
            }
            Ok(counts.join(", "))
        },
    );
}

#[test]
fn criterion_04_closed_form() {
    report(
        4,
        "induced_solution equals twist(B_{q,λ}, α) for every N = 3 pattern",
        Duration::from_secs(5),
        || {
            let b = bql(3).map_err(e)?;
            let patterns = enumerate_patterns(3);
            for p in &patterns {
                let alpha = CompatibleAlpha::symbolic(p.clone());
                let closed = induced_solution(&alpha).map_err(e)?;
                let direct = twist(&b, &alpha.to_linear_map()).map_err(e)?;
                ensure(closed == direct, || format!("pattern {p}"))?;
            }
            Ok(format!("{} patterns", patterns.len()))
        },
    );
}

#[test]
fn criterion_05_family_points() {
    report(
        5,
        "family members at 100 random points are exact Hom-Lie algebras",
        Duration::from_secs(10),
        || {
            let mut rng = StdRng::seed_from_u64(SEED);
            let mut checked = 0;
            for _ in 0..100 {
                let mut instances: Vec<(&str, LieAlgebra, LinearMap)> = vec![
                    ("heisenberg", heisenberg(), heisenberg_instance(&mut rng)),
                    ("sl2* kind 1", sl2_star(), sl2_star_instance(&mut rng, 1)),
                    ("sl2* kind 2", sl2_star(), sl2_star_instance(&mut rng, 2)),
                ];
                for kind in 1..=3 {
                    let m = sl2_instance(&mut rng, kind);
                    ensure(m.determinant().is_one(), || {
                        format!("sl2 kind {kind}: det {}", m.determinant())
                    })?;
                    instances.push(("sl2", sl2(), m));
                }
                for (name, g, m) in instances {
                    let l = yau_twist(&g, &m).map_err(e)?;
                    ensure(hom_lie_is_exact(&l), || {
                        format!("{name} at {:?}", m.matrix())
                    })?;
                    checked += 1;
                }
            }
            Ok(format!("{checked} instances"))
        },
    );
}

#[test]
fn criterion_06_finite_field_completeness() {
    type Oracle = fn(u64) -> hombrax_core::Result<hombrax_core::homlie::Classification>;
    let oracles: [(&str, Oracle, u64); 3] = [
        ("sl2", classify_sl2_finite_field, 121),
        ("heisenberg", classify_heisenberg_finite_field, 15625),
        ("sl2*", classify_sl2_star_finite_field, 15725),
    ];
    for (name, oracle, expected) in oracles {
        report(
            6,
            &format!("{name} over F_5 has no unclassified morphism"),
            Duration::from_secs(120),
            || {
                let c = oracle(5).map_err(e)?;
                ensure(c.unclassified == 0 && c.overlaps == 0, || c.to_string())?;
                ensure(c.solutions == expected, || {
                    format!("{} morphisms", c.solutions)
                })?;
                Ok(format!(
                    "{} morphisms in {} matrices",
                    c.solutions, c.scanned
                ))
            },
        );
    }
}

#[test]
fn criterion_07_extension_inverse() {
    report(
        7,
        "B_α on C ⊕ g and its inverse for 20 invertible instances",
        Duration::from_secs(30),
        || {
            let mut rng = StdRng::seed_from_u64(SEED + 7);
            let mut algebras = Vec::new();
            while algebras.len() < 20 {
                let (g, m) = match algebras.len() % 3 {
                    0 => (heisenberg(), heisenberg_instance(&mut rng)),
                    1 => (sl2_star(), sl2_star_instance(&mut rng, 1)),
                    _ => (
                        sl2(),
                        sl2_instance(&mut rng, 1 + (algebras.len() % 9 / 3) as u8),
                    ),
                };
                if invertible(&m) {
                    algebras.push(yau_twist(&g, &m).map_err(e)?);
                }
            }
            for l in &algebras {
                let b = braiding_on_extension(l).map_err(e)?;
                let bi = braiding_inverse_on_extension(l).map_err(e)?;
                let a = extend_alpha(l);
                let ai = a.inverse().map_err(e)?;
                let id = TensorOp::identity(b.space().clone(), 2);
                vanishes("HYBE of B_α", &hybe_residual(&b, &a).map_err(e)?)?;
                vanishes(
                    "B∘B⁻¹ - Id",
                    &b.compose(&bi).map_err(e)?.residual(&id).map_err(e)?,
                )?;
                vanishes(
                    "B⁻¹∘B - Id",
                    &bi.compose(&b).map_err(e)?.residual(&id).map_err(e)?,
                )?;
                vanishes(
                    "HYBE of B⁻¹ against α⁻¹",
                    &hybe_residual(&bi, &ai).map_err(e)?,
                )?;
            }
            Ok("20 instances".into())
        },
    );
}

#[test]
fn criterion_08_braid_relations() {
    report(
        8,
        "braid relations for n = 3, 4 over the solution gallery",
        Duration::from_secs(60),
        || {
            let mut gallery: Vec<(String, TensorOp, LinearMap)> = Vec::new();
            for a in phi_shapes() {
                gallery.push((
                    format!("Φ_α {:?}", a.matrix()),
                    twist(&phi(), &a).map_err(e)?,
                    a,
                ));
            }
            let point = at(rat(2, 1), rat(3, 1));
            let mut rng = StdRng::seed_from_u64(SEED + 8);
            let b3 = bql(3).map_err(e)?.instantiate(&point).map_err(e)?;
            for p in maximal_patterns(3) {
                let values = p
                    .support()
                    .into_iter()
                    .map(|k| (k, s(rand_nonzero(&mut rng))))
                    .collect();
                let alpha = CompatibleAlpha::new(p.clone(), values).map_err(e)?;
                let induced = induced_solution(&alpha)
                    .map_err(e)?
                    .instantiate(&point)
                    .map_err(e)?;
                ensure(
                    induced == twist(&b3, &alpha.to_linear_map()).map_err(e)?,
                    || format!("closed form at {p}"),
                )?;
                gallery.push((format!("B_α pattern {p}"), induced, alpha.to_linear_map()));
            }
            for (name, g, m) in [
                ("heisenberg", heisenberg(), heisenberg_instance(&mut rng)),
                ("sl2*", sl2_star(), sl2_star_instance(&mut rng, 2)),
                ("sl2", sl2(), sl2_instance(&mut rng, 3)),
            ] {
                let l = yau_twist(&g, &m).map_err(e)?;
                gallery.push((
                    format!("extension {name}"),
                    braiding_on_extension(&l).map_err(e)?,
                    extend_alpha(&l),
                ));
            }
            let mut relations = 0;
            for (name, b, a) in &gallery {
                for n in 3..=4 {
                    for r in braid_relation_residuals(b, a, n).map_err(e)? {
                        vanishes(&format!("{name}, n={n}, {}", r.relation), &r.residual)?;
                        relations += 1;
                    }
                }
            }
            Ok(format!(
                "{} solutions, {relations} relations",
                gallery.len()
            ))
        },
    );
}

#[test]
fn criterion_09_iwahori_well_defined() {
    report(
        9,
        "B^γ is independent of the reduced word for all γ in S_4",
        Duration::from_secs(60),
        || {
            let (b, a) = numeric_phi_pair();
            let sym = b.compose(&TensorOp::swap(b.space().clone())).map_err(e)?;
            ensure(
                sym != TensorOp::swap(b.space().clone()).compose(&b).map_err(e)?,
                || "solution commutes with the flip".into(),
            )?;
            let mut words = 0;
            for gamma in all_permutations(4) {
                let all = all_reduced_words(&gamma);
                let bubble = reduced_word(&gamma);
                let last = all.iter().next_back().expect("at least one word").clone();
                ensure(all.contains(&bubble), || {
                    format!("{gamma}: bubble word {bubble} not reduced")
                })?;
                let reference = theta_operator(&gamma, &b, &a).map_err(e)?;
                for w in [&bubble, &last].into_iter().chain(all.iter()) {
                    ensure(word_operator(w, &b, &a).map_err(e)? == reference, || {
                        format!("{gamma}: word {w}")
                    })?;
                    words += 1;
                }
            }
            Ok(format!("24 permutations, {words} words"))
        },
    );
}

#[test]
fn criterion_10_tensor_power() {
    report(
        10,
        "tensor-power solutions for n = 2 and n = 3 on a 2-dimensional V",
        Duration::from_secs(300),
        || {
            let (b, a) = numeric_phi_pair();
            let g: Vec<TensorOp> = (1..=3)
                .map(|i| build_bi(&b, &a, 4, i))
                .collect::<Result<_, _>>()
                .map_err(e)?;
            let factored = g[1]
                .compose(&g[2])
                .and_then(|x| x.compose(&g[0]))
                .and_then(|x| x.compose(&g[1]))
                .map_err(e)?;
            ensure(
                theta_operator(&chi(2, 2), &b, &a).map_err(e)? == factored,
                || "χ22 ≠ B2 B3 B1 B2".into(),
            )?;
            let mut dims = Vec::new();
            for n in 2..=3 {
                let (bn, an) = tensor_power_solution(&b, &a, n).map_err(e)?;
                ensure(
                    an.to_op() == alpha_n(&a, n).rebase(bn.space().clone(), 1).map_err(e)?,
                    || format!("α_{n} mismatch"),
                )?;
                let r = hybe_residual(&bn, &an).map_err(e)?;
                vanishes(&format!("HYBE n={n}"), &r)?;
                bn.invert().map_err(|x| format!("B^χ n={n}: {x}"))?;
                an.inverse().map_err(|x| format!("α_{n}: {x}"))?;
                dims.push(r.size());
            }
            Ok(format!("triple tensor dimensions {dims:?}"))
        },
    );
}

#[test]
fn criterion_11_block_identities() {
    report(
        11,
        "α_n ⊗ B^χ = B^{1×χ} and B^χ ⊗ α_n = B^{χ×1} for n = 2",
        Duration::from_secs(30),
        || {
            let (b, a) = numeric_phi_pair();
            let n = 2;
            let x = chi(n, n);
            let bx = theta_operator(&x, &b, &a).map_err(e)?;
            let an = alpha_n(&a, n);
            let id = Permutation::identity(n);
            let left = an.tensor(&bx).map_err(e)?;
            ensure(
                left == theta_operator(&id.block_sum(&x), &b, &a).map_err(e)?,
                || "α_n ⊗ B^χ".into(),
            )?;
            let right = bx.tensor(&an).map_err(e)?;
            ensure(
                right == theta_operator(&x.block_sum(&id), &b, &a).map_err(e)?,
                || "B^χ ⊗ α_n".into(),
            )?;
            Ok(format!("operators on {} basis vectors", left.size()))
        },
    );
}

fn all_small_maps(space: &Arc<hombrax_core::BasedSpace>) -> Vec<LinearMap> {
    let n = space.dim();
    let total = 3usize.pow((n * n) as u32);
    (0..total)
        .map(|mut code| {
            let rows = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            let v = (code % 3) as i64 - 1;
                            code /= 3;
                            rat(v, 1)
                        })
                        .collect()
                })
                .collect::<Vec<Vec<_>>>();
            LinearMap::from_rationals(space.clone(), &rows).unwrap()
        })
        .collect()
}

#[test]
fn criterion_12_yetter_drinfeld() {
    report(
        12,
        "YD gallery braidings solve YBE and HYBE; corollary forms match",
        Duration::from_secs(10),
        || {
            let mut gallery: Vec<(String, YdModule)> = vec![
                ("graded".into(), graded_module(&[0, 1]).map_err(e)?),
                (
                    "qt".into(),
                    comodule_from_qt(
                        &sign_module(&[0, 1]).map_err(e)?,
                        &hombrax_core::yd::z2_triangular(),
                    )
                    .map_err(e)?,
                ),
                (
                    "dqt".into(),
                    module_from_dqt(&graded_comodule(&[0, 1]).map_err(e)?, &sign_bicharacter())
                        .map_err(e)?,
                ),
            ];
            for m in 1..=3 {
                let host = Arc::new(group_bialgebra(m).map_err(e)?);
                let v = trivial_module(host.clone(), 2).map_err(e)?;
                let qt = trivial_qt(host.clone()).map_err(e)?;
                let dqt = trivial_dqt(host).map_err(e)?;
                gallery.push((format!("trivial m={m}"), v.clone()));
                gallery.push((
                    format!("trivial qt m={m}"),
                    comodule_from_qt(v.module(), &qt).map_err(e)?,
                ));
                gallery.push((
                    format!("trivial dqt m={m}"),
                    module_from_dqt(v.comodule(), &dqt).map_err(e)?,
                ));
                let c = yd_braiding(&comodule_from_qt(v.module(), &qt).map_err(e)?).map_err(e)?;
                ensure(c == qt_braiding(v.module(), &qt).map_err(e)?, || {
                    format!("τ∘R, trivial m={m}")
                })?;
                let c = yd_braiding(&module_from_dqt(v.comodule(), &dqt).map_err(e)?).map_err(e)?;
                ensure(c == dqt_braiding(v.comodule(), &dqt).map_err(e)?, || {
                    format!("dual form, trivial m={m}")
                })?;
            }
            let sm = sign_module(&[0, 1]).map_err(e)?;
            let zt = hombrax_core::yd::z2_triangular();
            ensure(
                yd_braiding(&comodule_from_qt(&sm, &zt).map_err(e)?).map_err(e)?
                    == qt_braiding(&sm, &zt).map_err(e)?,
                || "τ∘R, Z/2".into(),
            )?;
            let gc = graded_comodule(&[0, 1]).map_err(e)?;
            let sb = sign_bicharacter();
            ensure(
                yd_braiding(&module_from_dqt(&gc, &sb).map_err(e)?).map_err(e)?
                    == dqt_braiding(&gc, &sb).map_err(e)?,
                || "dual form, Z/2".into(),
            )?;
            let mut hybe_checked = 0;
            for (name, v) in &gallery {
                let defects = yd_condition_residual(v).map_err(e)?;
                ensure(defects.is_empty(), || {
                    format!("{name}: {} YD defects", defects.len())
                })?;
                let c = yd_braiding(v).map_err(e)?;
                vanishes(&format!("YBE {name}"), &ybe_residual(&c).map_err(e)?)?;
                for a in all_small_maps(v.space()) {
                    if check_colinearity(&a, v.comodule())
                        && check_linearity(&a, v.module(), v.host())
                    {
                        vanishes(
                            &format!("HYBE {name} α={:?}", a.matrix()),
                            &hybe_residual(&c, &a).map_err(e)?,
                        )?;
                        hybe_checked += 1;
                    }
                }
            }
            Ok(format!(
                "{} modules, {hybe_checked} admissible α",
                gallery.len()
            ))
        },
    );
}

#[test]
fn criterion_13_non_isomorphism_witnesses() {
    report(
        13,
        "pairwise non-isomorphic g_α per family and 20 conjugate pairs",
        Duration::from_secs(10),
        || {
            let k = |x: i64| Scalar::from_int(x);
            let z = Scalar::zero;
            let families: [(&str, LieAlgebra, Vec<LinearMap>); 3] = [
                (
                    "heisenberg",
                    heisenberg(),
                    (2..=12)
                        .map(|t| heisenberg_morphism(&z(), &z(), &k(t), &z(), &z(), &k(1)))
                        .collect(),
                ),
                (
                    "sl2*",
                    sl2_star(),
                    (2..=12)
                        .map(|t| sl2_star_morphism(1, &[z(), k(t), z(), z(), z(), k(1)]).unwrap())
                        .collect(),
                ),
                (
                    "sl2",
                    sl2(),
                    (2..=12)
                        .map(|t| sl2_morphism(3, &rat(1, 1), &rat(1, 1), &rat(t, 1)).unwrap())
                        .collect(),
                ),
            ];
            let mut summary = Vec::new();
            for (name, g, maps) in &families {
                for (i, x) in maps.iter().enumerate() {
                    ensure(hom_lie_is_exact(&yau_twist(g, x).map_err(e)?), || {
                        format!("{name} #{i} is not Hom-Lie")
                    })?;
                    for y in &maps[i + 1..] {
                        ensure(conjugacy_obstruction(x, y), || {
                            format!(
                                "{name}: {:?} and {:?} share a characteristic polynomial",
                                x.matrix(),
                                y.matrix()
                            )
                        })?;
                    }
                }
                summary.push(format!("{name}: {}", maps.len()));
            }
            let mut rng = StdRng::seed_from_u64(SEED + 13);
            let mut pairs = 0;
            while pairs < 20 {
                let (g, alpha, gamma) = match pairs % 3 {
                    0 => (
                        heisenberg(),
                        heisenberg_instance(&mut rng),
                        heisenberg_instance(&mut rng),
                    ),
                    1 => (
                        sl2_star(),
                        sl2_star_instance(&mut rng, 1),
                        sl2_star_instance(&mut rng, 1),
                    ),
                    _ => (sl2(), sl2_instance(&mut rng, 3), sl2_instance(&mut rng, 3)),
                };
                if !invertible(&gamma) {
                    continue;
                }
                let beta = gamma
                    .compose(&alpha)
                    .and_then(|x| x.compose(&gamma.inverse()?))
                    .map_err(e)?;
                let (la, lb) = (
                    yau_twist(&g, &alpha).map_err(e)?,
                    yau_twist(&g, &beta).map_err(e)?,
                );
                ensure(is_hom_lie_isomorphism(&gamma, &la, &lb).map_err(e)?, || {
                    format!("γ = {:?}", gamma.matrix())
                })?;
                ensure(!conjugacy_obstruction(&alpha, &beta), || {
                    "conjugate maps flagged".into()
                })?;
                pairs += 1;
            }
            summary.push(format!("{pairs} conjugate pairs"));
            Ok(summary.join(", "))
        },
    );
}
