use crate::embeddings::EmbeddingMap;
use crate::numerics::Mode;
use crate::quandle::Quandle;
use crate::verify::{run_partitioned, Outcome, VerificationReport};

/// Pairs `(i, j)`, `i < j`, whose keys lie within `window` and for which
/// `collide(i, j)` holds. Sound as long as colliding items have keys within
/// `window` of each other.
pub fn find_collisions(keys: &[f64], window: f64, mut collide: impl FnMut(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by(|&a, &b| keys[a].total_cmp(&keys[b]).then(a.cmp(&b)));
    let mut out = Vec::new();
    for (pos, &i) in order.iter().enumerate() {
        for &j in &order[pos + 1..] {
            // NaN keys (items without a value) never collide
            if !(keys[j] - keys[i] <= window) {
                break;
            }
            let (a, b) = if i < j { (i, j) } else { (j, i) };
            if collide(a, b) {
                out.push((a, b));
            }
        }
    }
    out.sort_unstable();
    out
}

fn same(mode: Mode, tol: f64, distance: f64) -> bool {
    match mode {
        Mode::Exact => distance == 0.0,
        Mode::Float => distance <= tol,
    }
}

/// Checks `f(x ▷ y) = f(x) ▷ f(y)` exhaustively on finite domains and on
/// `samples` seeded pairs otherwise.
pub fn check_hom<D: Quandle, C: Quandle>(f: &EmbeddingMap<D, C>, samples: usize, seed: u64, tol: f64) -> VerificationReport {
    let (dom, cod) = (f.domain(), f.codomain());
    let mode = cod.mode();
    let one = |x: &D::Elem, y: &D::Elem| -> Outcome {
        let lhs = f.apply(&dom.op(x, y));
        let rhs = f.apply(x).and_then(|fx| f.apply(y).map(|fy| cod.op(&fx, &fy)));
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => Outcome::check(mode, tol, cod.distance(&l, &r), || {
                format!("x={x:?}, y={y:?}: f(x▷y)={l:?} but f(x)▷f(y)={r:?}")
            }),
            (Err(e), _) | (_, Err(e)) => Outcome::require(false, || format!("x={x:?}, y={y:?}: {e}")),
        }
    };
    let name = format!("hom {}: {} -> {}", f.name(), dom.name(), cod.name());
    if let Some(elems) = dom.elements() {
        let outcomes: Vec<Outcome> = elems.iter().flat_map(|x| elems.iter().map(move |y| (x, y))).map(|(x, y)| one(x, y)).collect();
        return VerificationReport::from_outcomes(name, mode, seed, tol, true, outcomes);
    }
    let outcomes = run_partitioned(samples, seed, |rng| {
        let (x, y) = (dom.sample(rng), dom.sample(rng));
        one(&x, &y)
    });
    VerificationReport::from_outcomes(name, mode, seed, tol, false, outcomes)
}

/// Checks that distinct inputs have distinct images. Inputs are the whole
/// carrier when finite, otherwise `samples` seeded points together with the
/// domain's companion points (e.g. antipodes). In float mode inputs count
/// as distinct when more than `10·tol` apart and images collide when within
/// `tol`; in exact mode both comparisons are exact.
pub fn check_injective<D: Quandle, C: Quandle>(
    f: &EmbeddingMap<D, C>,
    samples: usize,
    seed: u64,
    tol: f64,
) -> VerificationReport {
    let (dom, cod) = (f.domain(), f.codomain());
    let mode = cod.mode();
    let name = format!("injective {}: {} -> {}", f.name(), dom.name(), cod.name());
    let (points, exhaustive) = match dom.elements() {
        Some(e) => (e, true),
        None => {
            let batches = run_partitioned(samples, seed, |rng| {
                let x = dom.sample(rng);
                let mut batch = dom.companions(&x);
                batch.insert(0, x);
                batch
            });
            (batches.into_iter().flatten().collect(), false)
        }
    };
    let mut outcomes = vec![Outcome::ok(); points.len()];
    let mut images = Vec::with_capacity(points.len());
    for (i, x) in points.iter().enumerate() {
        match f.apply(x) {
            Ok(y) => images.push(Some(y)),
            Err(e) => {
                outcomes[i] = Outcome::require(false, || format!("x={x:?}: {e}"));
                images.push(None);
            }
        }
    }
    let keys: Vec<f64> = images.iter().map(|y| y.as_ref().map_or(f64::NAN, |y| cod.sort_key(y))).collect();
    let window = if mode == Mode::Exact { 0.0 } else { tol };
    let separation = if dom.mode() == Mode::Exact { 0.0 } else { 10.0 * tol };
    let collisions = find_collisions(&keys, window, |i, j| match (&images[i], &images[j]) {
        (Some(a), Some(b)) => same(mode, tol, cod.distance(a, b)) && dom.distance(&points[i], &points[j]) > separation,
        _ => false,
    });
    for (i, j) in collisions {
        let (x, y) = (&points[i], &points[j]);
        let image = images[i].as_ref().expect("colliding points have images");
        outcomes[j] = Outcome::require(false, || format!("x={x:?} and y={y:?} both map to {image:?}"));
    }
    VerificationReport::from_outcomes(name, mode, seed, tol, exhaustive, outcomes)
}
