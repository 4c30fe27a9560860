use std::fmt;

use super::families::nine;
use super::{
    heisenberg, heisenberg_morphism, sl2_morphism, sl2_star, sl2_star_morphism, LieAlgebra,
};
use crate::error::{Error, Result};
use crate::scalars::{check_odd_prime, rat, reduce_mod_p, scan_vectors, Rational, Scalar};
use crate::tensor::LinearMap;

const KEEP: usize = 8;

/// Counts from scanning all `3×3` matrices over `F_p` for morphisms and
/// sorting them into the known families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub algebra: String,
    pub p: u64,
    pub scanned: u64,
    pub solutions: u64,
    /// Family name and the number of solutions it contains.
    pub families: Vec<(String, u64)>,
    /// Solutions lying in more than one family.
    pub overlaps: u64,
    pub unclassified: u64,
    /// Up to eight unclassified solutions, row-major.
    pub unclassified_examples: Vec<Vec<u64>>,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} over F_{}: {} matrices, {} morphisms",
            self.algebra, self.p, self.scanned, self.solutions
        )?;
        for (name, n) in &self.families {
            writeln!(f, "  {name}: {n}")?;
        }
        writeln!(f, "  overlaps: {}", self.overlaps)?;
        write!(f, "  unclassified: {}", self.unclassified)
    }
}

type Family = (&'static str, Box<dyn Fn(&[u64], u64) -> bool + Sync + Send>);

fn r(x: u64) -> Rational {
    rat(x as i64, 1)
}

fn s(x: u64) -> Scalar {
    Scalar::from_rational(r(x))
}

/// Whether a rational map reduces to the row-major matrix `a` mod `p`.
fn reduces_to(m: &LinearMap, a: &[u64], p: u64) -> bool {
    (0..3).all(|k| {
        (0..3).all(|i| {
            let x = m.entry(k, i).as_rational().expect("constant map");
            reduce_mod_p(&x, p).map(|v| v.value()) == Ok(a[k * 3 + i])
        })
    })
}

fn at(a: &[u64], i: usize, j: usize) -> u64 {
    a[(i - 1) * 3 + (j - 1)]
}

fn scan(
    name: &str,
    p: u64,
    is_solution: impl Fn(&[u64]) -> bool + Sync + Send,
    families: Vec<Family>,
) -> Result<Classification> {
    check_odd_prime(p)?;
    let alphabet: Vec<u64> = (0..p).collect();
    let nf = families.len();
    let init = || Classification {
        algebra: name.to_string(),
        p,
        scanned: 0,
        solutions: 0,
        families: families.iter().map(|(n, _)| (n.to_string(), 0)).collect(),
        overlaps: 0,
        unclassified: 0,
        unclassified_examples: Vec::new(),
    };
    Ok(scan_vectors(
        9,
        &alphabet,
        init,
        |acc, a| {
            acc.scanned += 1;
            if !is_solution(a) {
                return;
            }
            acc.solutions += 1;
            let mut hits = 0;
            for (f, slot) in families.iter().zip(acc.families.iter_mut()) {
                if (f.1)(a, p) {
                    slot.1 += 1;
                    hits += 1;
                }
            }
            if hits > 1 {
                acc.overlaps += 1;
            }
            if hits == 0 {
                acc.unclassified += 1;
                if acc.unclassified_examples.len() < KEEP {
                    acc.unclassified_examples.push(a.to_vec());
                }
            }
        },
        |mut x, y| {
            x.scanned += y.scanned;
            x.solutions += y.solutions;
            for k in 0..nf {
                x.families[k].1 += y.families[k].1;
            }
            x.overlaps += y.overlaps;
            x.unclassified += y.unclassified;
            x.unclassified_examples.extend(y.unclassified_examples);
            x.unclassified_examples.sort();
            x.unclassified_examples.truncate(KEEP);
            x
        },
    ))
}

/// Structure constants of a rational Lie algebra reduced mod `p`.
fn constants_mod_p(g: &LieAlgebra, p: u64) -> Result<Vec<u64>> {
    let mut out = Vec::with_capacity(27);
    for row in g.bracket().constants() {
        for v in row {
            for x in v {
                out.push(reduce_mod_p(&x.as_rational().expect("rational constants"), p)?.value());
            }
        }
    }
    Ok(out)
}

/// `α[x_i,x_j] = [αx_i, αx_j]` mod `p` for a row-major `3×3` matrix.
fn is_morphism_mod_p(c: &[u64], a: &[u64], p: u64) -> bool {
    let cc = |i: usize, j: usize, k: usize| c[(i * 3 + j) * 3 + k];
    for i in 0..3 {
        for j in i + 1..3 {
            for k in 0..3 {
                let lhs = (0..3).map(|m| a[k * 3 + m] * cc(i, j, m)).sum::<u64>() % p;
                let mut rhs = 0;
                for s in 0..3 {
                    for t in 0..3 {
                        rhs += a[s * 3 + i] * a[t * 3 + j] % p * cc(s, t, k);
                    }
                }
                if lhs != rhs % p {
                    return false;
                }
            }
        }
    }
    true
}

/// Every morphism of `sl(2)` over `F_p` (solutions of the nine equations),
/// sorted into the zero map and the three parametrized families.
pub fn scan_sl2(p: u64) -> Result<Classification> {
    let pi = p as i64;
    let minus_one = p - 1;
    let families: Vec<Family> = vec![
        ("zero", Box::new(|a: &[u64], _| a.iter().all(|&x| x == 0))),
        (
            "kind 1",
            Box::new(move |a: &[u64], p| {
                let (aa, b, c) = (at(a, 1, 3), at(a, 2, 2), at(a, 1, 2));
                b != 0
                    && aa * c % p == 0
                    && sl2_morphism(1, &r(aa), &r(b), &r(c)).is_ok_and(|m| reduces_to(&m, a, p))
            }),
        ),
        (
            "kind 2",
            Box::new(move |a: &[u64], p| {
                let (aa, b, c) = (at(a, 1, 3), at(a, 3, 2), at(a, 1, 2));
                b != 0
                    && aa * c % p == 0
                    && sl2_morphism(2, &r(aa), &r(b), &r(c)).is_ok_and(|m| reduces_to(&m, a, p))
            }),
        ),
        (
            "kind 3",
            Box::new(move |a: &[u64], p| {
                let (aa, b, c) = (at(a, 1, 2), at(a, 2, 1), at(a, 1, 1));
                aa != 0
                    && b != 0
                    && c != 1
                    && c != minus_one
                    && sl2_morphism(3, &r(aa), &r(b), &r(c)).is_ok_and(|m| reduces_to(&m, a, p))
            }),
        ),
    ];
    scan(
        "sl2",
        p,
        move |a| {
            nine(|i, j| at(a, i, j) as i64, 1, 2)
                .iter()
                .all(|x| x.rem_euclid(pi) == 0)
        },
        families,
    )
}

/// Every morphism of the Heisenberg algebra over `F_p`, matched against the
/// six-parameter family.
pub fn scan_heisenberg(p: u64) -> Result<Classification> {
    check_odd_prime(p)?;
    let c = constants_mod_p(&heisenberg(), p)?;
    let families: Vec<Family> = vec![(
        "family",
        Box::new(|a: &[u64], p| {
            let m = heisenberg_morphism(
                &s(at(a, 1, 2)),
                &s(at(a, 1, 3)),
                &s(at(a, 2, 2)),
                &s(at(a, 2, 3)),
                &s(at(a, 3, 2)),
                &s(at(a, 3, 3)),
            );
            reduces_to(&m, a, p)
        }),
    )];
    scan(
        "heisenberg",
        p,
        move |a| is_morphism_mod_p(&c, a, p),
        families,
    )
}

/// Every morphism of `sl(2)*` over `F_p`, matched against its two families.
pub fn scan_sl2_star(p: u64) -> Result<Classification> {
    check_odd_prime(p)?;
    let c = constants_mod_p(&sl2_star(), p)?;
    let families: Vec<Family> = vec![
        (
            "kind 1",
            Box::new(|a: &[u64], p| {
                let ps: Vec<Scalar> = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)]
                    .iter()
                    .map(|&(i, j)| s(at(a, i, j)))
                    .collect();
                sl2_star_morphism(1, &ps).is_ok_and(|m| reduces_to(&m, a, p))
            }),
        ),
        (
            "kind 2",
            Box::new(|a: &[u64], p| {
                at(a, 1, 1) != 1
                    && sl2_star_morphism(2, &[s(at(a, 1, 1)), s(at(a, 2, 1)), s(at(a, 3, 1))])
                        .is_ok_and(|m| reduces_to(&m, a, p))
            }),
        ),
    ];
    scan("sl2star", p, move |a| is_morphism_mod_p(&c, a, p), families)
}

fn require_complete(c: Classification) -> Result<Classification> {
    if c.unclassified == 0 {
        Ok(c)
    } else {
        Err(Error::UnclassifiedMorphismFound(format!(
            "{} over F_{}: {} unclassified, first {:?}",
            c.algebra, c.p, c.unclassified, c.unclassified_examples[0]
        )))
    }
}

/// [`scan_sl2`], failing if some morphism lies outside every family.
pub fn classify_sl2_finite_field(p: u64) -> Result<Classification> {
    require_complete(scan_sl2(p)?)
}

/// [`scan_heisenberg`], failing on unclassified morphisms.
pub fn classify_heisenberg_finite_field(p: u64) -> Result<Classification> {
    require_complete(scan_heisenberg(p)?)
}

/// [`scan_sl2_star`], failing on unclassified morphisms.
pub fn classify_sl2_star_finite_field(p: u64) -> Result<Classification> {
    require_complete(scan_sl2_star(p)?)
}

#[cfg(test)]
mod tests {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    use super::*;
    use crate::homlie::families::xyz;
    use crate::homlie::{multiplicativity_residual, sl2, sl2_morphism, sl2_morphism_equations};

    #[test]
    fn nine_equations_match_direct_residual_mod_5() {
        let mut rng = StdRng::seed_from_u64(7);
        let g = sl2();
        let mut agree_on_solutions = 0;
        for t in 0..1000 {
            // every other sample is a family member reduced mod 5
            let rows: Vec<Vec<Rational>> = if t % 2 == 0 {
                (0..3)
                    .map(|_| (0..3).map(|_| r(rng.gen_range(0..5))).collect())
                    .collect()
            } else {
                let kind = rng.gen_range(1..=3u8);
                let b = r(rng.gen_range(1..5));
                let (a, c) = if kind == 3 {
                    (r(rng.gen_range(1..5)), r([0, 2, 3][rng.gen_range(0..3)]))
                } else if rng.gen_bool(0.5) {
                    (r(0), r(rng.gen_range(0..5)))
                } else {
                    (r(rng.gen_range(0..5)), r(0))
                };
                let m = sl2_morphism(kind, &a, &b, &c).unwrap();
                m.matrix()
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|x| r(reduce_mod_p(&x.as_rational().unwrap(), 5).unwrap().value()))
                            .collect()
                    })
                    .collect()
            };
            let m = LinearMap::from_rationals(xyz(), &rows).unwrap();
            let vanish =
                |x: &Scalar| reduce_mod_p(&x.as_rational().unwrap(), 5).unwrap().value() == 0;
            let by_nine = sl2_morphism_equations(&m).iter().all(vanish);
            let by_residual = multiplicativity_residual(g.bracket(), &m)
                .iter()
                .all(|(_, v)| v.iter().all(vanish));
            assert_eq!(by_nine, by_residual, "{rows:?}");
            agree_on_solutions += by_nine as u32;
        }
        assert!(agree_on_solutions >= 250, "{agree_on_solutions}");
    }

    #[test]
    fn small_prime_scans_are_complete() {
        let c = classify_sl2_finite_field(3).unwrap();
        assert_eq!(c.scanned, 19683);
        assert_eq!(c.families[0].1, 1);
        assert!(classify_heisenberg_finite_field(3).is_ok());
        let h = scan_heisenberg(3).unwrap();
        assert_eq!(h.solutions, 729);
        let st = classify_sl2_star_finite_field(3).unwrap();
        assert_eq!(st.families[0].1, 729);
        assert_eq!(st.families[1].1, 2 * 9);
        assert_eq!(st.overlaps, 0);
    }

    #[test]
    fn even_prime_rejected() {
        assert_eq!(scan_sl2(2), Err(Error::InvalidPrime(2)));
        assert_eq!(scan_heisenberg(9), Err(Error::InvalidPrime(9)));
    }
}
