use rand::Rng;

use crate::clifford::{PinGroup, Versor};
use crate::embeddings::{
    f_a_reduced, f_b, h_tilde_3, i_n, inn_map, iota_1, iota_3, iota_3_pair, iota_n, p4, pi_h, pin4_cover,
    script_i1, script_i2, so2_with_inversion, sphere_point_of_pair,
};
use crate::error::{Error, Result};
use crate::groups::{delta, gamma, iota_g, Group, OrthogonalGroup, Su2, Su2Matrix, SwElement, SwProduct, Z2Element, Z2Product};
use crate::numerics::{h_matrix, j_matrix, Matrix, Mode, SampleUnit, Vector};
use crate::quandle::{ProjectivePoint, Quandle, SpherePoint, SphereQuandle};
use crate::verify::{find_collisions, run_partitioned, Outcome, VerificationReport};
use crate::Rational;

fn err_outcome(context: &str, e: Error) -> Outcome {
    Outcome::require(false, || format!("{context}: {e}"))
}

fn compare<E: std::fmt::Debug>(mode: Mode, tol: f64, lhs: &E, rhs: &E, distance: f64, context: impl FnOnce() -> String) -> Outcome {
    Outcome::check(mode, tol, distance, || format!("{}: {lhs:?} vs {rhs:?}", context()))
}

/// The two squares identifying ι₁, f_A and f_B for G = SO(2):
/// `γ∘ι₁ = f_A∘𝓘₁` into SO(2) ⋊_Inv ℤ/2, and `ι_G∘f_A = f_B` into
/// (SO(2)×SO(2)) ⋊_Sw ℤ^×. The base point `(1, 0)` is always included.
pub fn check_diagram_63<S: SampleUnit>(samples: usize, seed: u64, tol: f64) -> VerificationReport {
    let mode = S::MODE;
    let circle = SphereQuandle::<S>::new(1);
    let (so2, inv) = so2_with_inversion::<S>();
    let target = Z2Product::new(so2.clone(), inv, tol).expect("transpose is an involution of SO(2)");
    let sw = SwProduct::new(so2.clone());

    let upper = |x: &SpherePoint<S>| -> Outcome {
        let lhs = iota_1(x).and_then(|m| gamma(&m, tol));
        let rhs = script_i1(x).map(|r| f_a_reduced(&r));
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => compare(mode, tol, &l, &r, target.distance(&l, &r), || format!("upper square at x={x:?}")),
            (Err(e), _) | (_, Err(e)) => err_outcome(&format!("upper square at x={x:?}"), e),
        }
    };
    let lower = |g: &Matrix<S>| -> Outcome {
        let lhs = iota_g(&so2, &f_a_reduced(g));
        let rhs = f_b(&so2, g);
        compare(mode, tol, &lhs, &rhs, sw.distance(&lhs, &rhs), || format!("lower square at g={g:?}"))
    };

    let mut outcomes = vec![upper(&SpherePoint::base_point(1))];
    outcomes.extend(run_partitioned(samples, seed, |rng| {
        let x = circle.sample(rng);
        let g = so2.sample(rng);
        Outcome::worst([upper(&x), lower(&g)])
    }));
    let squares = VerificationReport::from_outcomes("diagram 6.3 squares", mode, seed, tol, false, outcomes);
    let iso = check_gamma_isomorphism::<S>(samples, seed, tol);
    VerificationReport::combine("diagram 6.3", &[squares, iso])
}

/// O(2) element with the requested determinant sign.
fn o2_with_det<S: SampleUnit, R: rand::Rng + ?Sized>(negative: bool, rng: &mut R) -> Matrix<S> {
    let r = OrthogonalGroup::<S>::special(2).sample(rng);
    if negative {
        r.mat_mul(&j_matrix()).expect("2x2")
    } else {
        r
    }
}

/// `γ` is a homomorphism in each of the four determinant cases, and
/// `γ∘δ`, `δ∘γ` are identities.
pub fn check_gamma_isomorphism<S: SampleUnit>(samples: usize, seed: u64, tol: f64) -> VerificationReport {
    let mode = S::MODE;
    let (so2, inv) = so2_with_inversion::<S>();
    let o2 = OrthogonalGroup::<S>::orthogonal(2);
    let target = Z2Product::new(so2, inv, tol).expect("transpose is an involution of SO(2)");
    let outcomes = run_partitioned(samples, seed, |rng| {
        let case = rng.random_range(0..4u8);
        let g = o2_with_det::<S, _>(case & 1 == 1, rng);
        let h = o2_with_det::<S, _>(case & 2 == 2, rng);
        let hom = match (gamma(&o2.mul(&g, &h), tol), gamma(&g, tol), gamma(&h, tol)) {
            (Ok(gh), Ok(a), Ok(b)) => {
                let prod = target.mul(&a, &b);
                compare(mode, tol, &gh, &prod, target.distance(&gh, &prod), || format!("γ(gh) vs γ(g)γ(h), g={g:?}, h={h:?}"))
            }
            (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => err_outcome(&format!("γ at g={g:?}, h={h:?}"), e),
        };
        let back = match gamma(&g, tol) {
            Ok(z) => {
                let d = delta(&z);
                compare(mode, tol, &d, &g, o2.distance(&d, &g), || "δ(γ(g)) vs g".into())
            }
            Err(e) => err_outcome("γ", e),
        };
        let z: Z2Element<Matrix<S>> = target.sample(rng);
        let forth = match gamma(&delta(&z), tol) {
            Ok(w) => compare(mode, tol, &w, &z, target.distance(&w, &z), || "γ(δ(z)) vs z".into()),
            Err(e) => err_outcome("γ∘δ", e),
        };
        Outcome::worst([hom, back, forth])
    });
    VerificationReport::from_outcomes("gamma isomorphism", mode, seed, tol, false, outcomes)
}

/// `f_B∘Inv∘𝓘₂ = ι₃` on S³. Points are drawn as `e₁·p₄(g,h)` for sampled
/// `(g, h)`, and ι₃ is evaluated from the pair; `e₁` is always included and
/// must map to H̃₃.
pub fn check_diagram_72<S: SampleUnit>(samples: usize, seed: u64, tol: f64) -> VerificationReport {
    let mode = S::MODE;
    let su2 = Su2::<S>::new();
    let sw = SwProduct::new(su2.clone());
    let one = |g: &Su2Matrix<S>, h: &Su2Matrix<S>| -> Outcome {
        let x = sphere_point_of_pair(g, h);
        let rhs = iota_3_pair(g, h);
        match script_i2(&x, tol.max(1e-9)) {
            Ok(m) => {
                let lhs = f_b(&su2, &su2.inv(&m));
                compare(mode, tol, &lhs, &rhs, sw.distance(&lhs, &rhs), || format!("at x={x:?}"))
            }
            Err(e) => err_outcome(&format!("𝓘₂ at x={x:?}"), e),
        }
    };
    let id = Su2Matrix::<S>::identity();
    let base = Outcome::worst([one(&id, &id), {
        let v = iota_3(&SpherePoint::<S>::base_point(3), tol.max(1e-9));
        let h = h_tilde_3::<S>();
        match v {
            Ok(v) => compare(mode, tol, &v, &h, sw.distance(&v, &h), || "ι₃(e₁) vs H̃₃".into()),
            Err(e) => err_outcome("ι₃(e₁)", e),
        }
    }]);
    let mut outcomes = vec![base];
    outcomes.extend(run_partitioned(samples, seed, |rng| one(&su2.sample(rng), &su2.sample(rng))));
    VerificationReport::from_outcomes("diagram 7.2", mode, seed, tol, false, outcomes)
}

/// `π_h∘ιₙ = iₙ∘π` on Sⁿ, for `2 <= n <= 8`, at sampled `x`, at `−x` and at
/// the base point.
pub fn check_covering_square<S: SampleUnit>(n: usize, samples: usize, seed: u64, tol: f64) -> Result<VerificationReport> {
    if !(2..=8).contains(&n) {
        return Err(Error::BoundExceeded { requested: n, max: 8 });
    }
    let mode = S::MODE;
    let q = SphereQuandle::<S>::new(n);
    let one = |x: &SpherePoint<S>| -> Outcome {
        let rhs = i_n(&ProjectivePoint::from_sphere(x, tol));
        match iota_n(x, tol).and_then(|u| pi_h(&u, tol)) {
            Ok(lhs) => compare(mode, tol, &lhs, &rhs, lhs.distance(&rhs), || format!("at x={x:?}")),
            Err(e) => err_outcome(&format!("at x={x:?}"), e),
        }
    };
    let mut outcomes = vec![one(&SpherePoint::base_point(n))];
    outcomes.extend(run_partitioned(samples, seed, |rng| {
        let x = q.sample(rng);
        Outcome::worst([one(&x), one(&x.antipode())])
    }));
    Ok(VerificationReport::from_outcomes(format!("covering square n={n}"), mode, seed, tol, false, outcomes))
}

/// `x·g̃ = Ad_{g̃⁻¹}(x)` computed in the Clifford algebra.
fn lifted_action<S: SampleUnit>(x: &Vector<S>, g: &Versor<S>, tol: f64) -> Result<Vector<S>> {
    g.inverse().twisted_adjoint(x, tol)
}

/// The right action of Spin(n+1) on Sⁿ through the cover: it agrees with
/// `x·p(g̃)`, is a right action, descends to Pⁿ, and `x·h̃ₙ = x·hₙ`.
pub fn check_lifted_action<S: SampleUnit>(n: usize, samples: usize, seed: u64, tol: f64) -> Result<VerificationReport> {
    if n == 0 || n + 1 > crate::clifford::MAX_DIMENSION {
        return Err(Error::DimensionTooLarge(n + 1));
    }
    let mode = S::MODE;
    let q = SphereQuandle::<S>::new(n);
    let spin = PinGroup::<S>::spin(n + 1);
    let h_tilde = Versor::<S>::h_tilde(n)?;
    let one = |x: &SpherePoint<S>, g1: &Versor<S>, g2: &Versor<S>| -> Result<Outcome> {
        let v = x.vector();
        let xg = lifted_action(v, g1, tol)?;
        let via_matrix = g1.covering_matrix(tol)?.row_mul(v)?;
        let step = lifted_action(&xg, g2, tol)?;
        let joint = lifted_action(v, &spin.mul(g1, g2), tol)?;
        let proj_lhs = ProjectivePoint::from_sphere(&SpherePoint::new(xg.clone(), 1e-6)?, tol);
        let rep = ProjectivePoint::from_sphere(x, tol).representative().vector().clone();
        let proj_rhs = ProjectivePoint::from_sphere(&SpherePoint::new(g1.covering_matrix(tol)?.row_mul(&rep)?, 1e-6)?, tol);
        let base = lifted_action(v, &h_tilde, tol)?;
        let base_rhs = h_matrix::<S>(n).row_mul(v)?;
        let ident = lifted_action(v, &spin.identity(), tol)?;
        Ok(Outcome::worst([
            compare(mode, tol, &xg, &via_matrix, xg.distance(&via_matrix), || format!("x·g̃ vs x·p(g̃) at x={x:?}")),
            compare(mode, tol, &step, &joint, step.distance(&joint), || format!("(x·g̃₁)·g̃₂ vs x·(g̃₁g̃₂) at x={x:?}")),
            compare(mode, tol, &proj_lhs, &proj_rhs, proj_lhs.distance(&proj_rhs), || format!("π(x·g̃) vs π(x)·p(g̃) at x={x:?}")),
            compare(mode, tol, &base, &base_rhs, base.distance(&base_rhs), || format!("x·h̃ₙ vs x·hₙ at x={x:?}")),
            compare(mode, tol, &ident, v, ident.distance(v), || format!("x·1 vs x at x={x:?}")),
        ]))
    };
    let outcomes = run_partitioned(samples, seed, |rng| {
        let x = q.sample(rng);
        let (g1, g2) = (spin.sample(rng), spin.sample(rng));
        one(&x, &g1, &g2).unwrap_or_else(|e| err_outcome(&format!("at x={x:?}"), e))
    });
    Ok(VerificationReport::from_outcomes(format!("lifted action n={n}"), mode, seed, tol, false, outcomes))
}

/// The eight unit quaternions `±1, ±i, ±j, ±k` as SU(2) matrices.
fn quaternion_units() -> Vec<Su2Matrix<Rational>> {
    (0..4)
        .flat_map(|i| {
            let e = Vector::<Rational>::basis(4, i).expect("i < 4");
            [e.clone(), -&e]
        })
        .map(|v| Su2Matrix::from_point(&v, 0.0).expect("unit"))
        .collect()
}

/// `Ker p₄ = {(I,I), (−I,−I)}`: both map to I₄; among the 64 pairs of unit
/// quaternions exactly these two do; `(diag(i,−i), I)` does not; and no
/// sampled pair outside the kernel maps to I₄.
pub fn check_kernel_p4(samples: usize, seed: u64) -> VerificationReport {
    let tol = 1e-9;
    let id4 = Matrix::<Rational>::identity(4).expect("4x4");
    let units = quaternion_units();
    let mut outcomes = Vec::new();
    let mut kernel = Vec::new();
    for g in &units {
        for h in &units {
            if p4(g, h) == id4 {
                kernel.push((g.clone(), h.clone()));
            }
        }
    }
    let id = Su2Matrix::<Rational>::identity();
    let expected = [(id.clone(), id.clone()), (id.neg(), id.neg())];
    outcomes.push(Outcome::require(kernel.len() == 2 && expected.iter().all(|k| kernel.contains(k)), || {
        format!("kernel among unit quaternion pairs is {kernel:?}")
    }));
    let diag_i = Su2Matrix::from_point(&Vector::from_ints(&[0, 1, 0, 0]).expect("dim 4"), 0.0).expect("unit");
    outcomes.push(Outcome::require(p4(&diag_i, &id) != id4, || "p₄(diag(i,−i), I) = I₄".into()));
    let exact = VerificationReport::from_outcomes("kernel p4 (exact)", Mode::Exact, seed, 0.0, true, outcomes);

    let su2 = Su2::<f64>::new();
    let id4f = Matrix::<f64>::identity(4).expect("4x4");
    let sampled = run_partitioned(samples, seed, |rng| {
        let (g, h) = (su2.sample(rng), su2.sample(rng));
        let in_kernel = g.distance(&h) <= tol && (g.distance(&Su2Matrix::identity()) <= tol || g.distance(&Su2Matrix::identity().neg()) <= tol);
        let d = p4(&g, &h).distance(&id4f);
        Outcome::require(in_kernel || d > tol, || format!("p₄({g:?}, {h:?}) = I₄"))
    });
    let sampled = VerificationReport::from_outcomes("kernel p4 (sampled)", Mode::Float, seed, tol, false, sampled);
    VerificationReport::combine("kernel p4", &[exact, sampled])
}

/// `p₄(g₁g₂, h₁h₂) = p₄(g₁,h₁)·p₄(g₂,h₂)`.
pub fn check_p4_hom<S: SampleUnit>(samples: usize, seed: u64, tol: f64) -> VerificationReport {
    let su2 = Su2::<S>::new();
    let outcomes = run_partitioned(samples, seed, |rng| {
        let (g1, h1, g2, h2) = (su2.sample(rng), su2.sample(rng), su2.sample(rng), su2.sample(rng));
        let lhs = p4(&g1.mul(&g2), &h1.mul(&h2));
        let rhs = p4(&g1, &h1).mat_mul(&p4(&g2, &h2)).expect("4x4");
        compare(S::MODE, tol, &lhs, &rhs, lhs.distance(&rhs), || format!("g₁={g1:?}, h₁={h1:?}, g₂={g2:?}, h₂={h2:?}"))
    });
    VerificationReport::from_outcomes("p4 homomorphism", S::MODE, seed, tol, false, outcomes)
}

/// The Pin⁺(4) cover is a homomorphism, sends H̃₃ to h₃, and covers inn
/// through ι₃.
pub fn check_pin4_cover<S: SampleUnit>(samples: usize, seed: u64, tol: f64) -> VerificationReport {
    let mode = S::MODE;
    let pin4 = SwProduct::new(Su2::<S>::new());
    let sphere = SphereQuandle::<S>::new(3);
    let h3 = pin4_cover(&h_tilde_3::<S>());
    let mut outcomes = vec![compare(mode, tol, &h3, &h_matrix(3), h3.distance(&h_matrix(3)), || "p(H̃₃) vs h₃".into())];
    outcomes.extend(run_partitioned(samples, seed, |rng| {
        let (a, b): (SwElement<_>, SwElement<_>) = (pin4.sample(rng), pin4.sample(rng));
        let lhs = pin4_cover(&pin4.mul(&a, &b));
        let rhs = pin4_cover(&a).mat_mul(&pin4_cover(&b)).expect("4x4");
        let hom = compare(mode, tol, &lhs, &rhs, lhs.distance(&rhs), || format!("p(ab) vs p(a)p(b), a={a:?}, b={b:?}"));
        let x = sphere.sample(rng);
        let cover = match iota_3(&x, tol.max(1e-9)) {
            Ok(u) => {
                let (l, r) = (pin4_cover(&u), inn_map(&x));
                compare(mode, tol, &l, &r, l.distance(&r), || format!("p(ι₃(x)) vs inn(x) at x={x:?}"))
            }
            Err(e) => err_outcome("ι₃", e),
        };
        Outcome::worst([hom, cover])
    }));
    VerificationReport::from_outcomes("pin4 cover", mode, seed, tol, false, outcomes)
}

/// The covering `p: Pin⁺(dim) → O(dim)` is a homomorphism with fibers
/// `{u, −u}`: `p(−u) = p(u)` with `u ≠ −u`, and no two sampled versors
/// other than such pairs share an image.
pub fn check_covering_degree_two<S: SampleUnit>(dim: usize, samples: usize, seed: u64, tol: f64) -> VerificationReport {
    let mode = S::MODE;
    let pin = PinGroup::<S>::pin(dim);
    let rows = run_partitioned(samples, seed, |rng| {
        let (u, v) = (pin.sample(rng), pin.sample(rng));
        let outcome = (|| -> Result<Outcome> {
            let (pu, pv, puv) = (u.covering_matrix(tol)?, v.covering_matrix(tol)?, pin.mul(&u, &v).covering_matrix(tol)?);
            let prod = pu.mat_mul(&pv)?;
            let pneg = u.neg().covering_matrix(tol)?;
            Ok(Outcome::worst([
                compare(mode, tol, &puv, &prod, puv.distance(&prod), || format!("p(uv) vs p(u)p(v), u={u:?}, v={v:?}")),
                compare(mode, tol, &pneg, &pu, pneg.distance(&pu), || format!("p(−u) vs p(u), u={u:?}")),
                Outcome::require(!same_versor(mode, tol, &u, &u.neg()), || format!("u = −u for u={u:?}")),
            ]))
        })()
        .unwrap_or_else(|e| err_outcome("covering", e));
        let image = u.covering_matrix(tol).ok();
        (u, image, outcome)
    });
    let keys: Vec<f64> = rows.iter().map(|(_, m, _)| m.as_ref().map_or(f64::NAN, Matrix::sort_key)).collect();
    let window = if mode == Mode::Exact { 0.0 } else { tol };
    let collisions = find_collisions(&keys, window, |i, j| {
        let (ui, mi, _) = &rows[i];
        let (uj, mj, _) = &rows[j];
        match (mi, mj) {
            (Some(a), Some(b)) => {
                same_distance(mode, tol, a.distance(b)) && !same_versor(mode, tol, ui, uj) && !same_versor(mode, tol, ui, &uj.neg())
            }
            _ => false,
        }
    });
    let mut outcomes: Vec<Outcome> = rows.iter().map(|(_, _, o)| o.clone()).collect();
    for (i, j) in collisions {
        let (ui, uj) = (&rows[i].0, &rows[j].0);
        outcomes[j] = Outcome::require(false, || format!("u={ui:?} and v={uj:?} share an image but v ≠ ±u"));
    }
    VerificationReport::from_outcomes(format!("covering degree two Pin({dim})"), mode, seed, tol, false, outcomes)
}

fn same_distance(mode: Mode, tol: f64, d: f64) -> bool {
    match mode {
        Mode::Exact => d == 0.0,
        Mode::Float => d <= tol,
    }
}

fn same_versor<S: SampleUnit>(mode: Mode, tol: f64, a: &Versor<S>, b: &Versor<S>) -> bool {
    same_distance(mode, tol, a.distance(b))
}

/// `ιₙ(x)` has even parity iff `n` is even.
pub fn check_parity<S: SampleUnit>(n: usize, samples: usize, seed: u64, tol: f64) -> VerificationReport {
    let q = SphereQuandle::<S>::new(n);
    let expected = crate::clifford::Parity::of(n);
    let outcomes = run_partitioned(samples, seed, |rng| {
        let x = q.sample(rng);
        match iota_n(&x, tol) {
            Ok(u) => {
                let actual = u.element().homogeneous_parity();
                Outcome::require(u.parity() == expected && actual == Some(expected), || {
                    format!("ιₙ(x) has parity {:?}, expected {expected:?}, x={x:?}", u.parity())
                })
            }
            Err(e) => err_outcome("ιₙ", e),
        }
    });
    VerificationReport::from_outcomes(format!("parity n={n}"), Mode::Exact, seed, tol, false, outcomes)
}
