use crate::quandle::Quandle;
use crate::verify::{run_partitioned, Outcome, VerificationReport};

fn q1<Q: Quandle>(q: &Q, tol: f64, x: &Q::Elem) -> Outcome {
    let xx = q.op(x, x);
    Outcome::check(q.mode(), tol, q.distance(&xx, x), || format!("Q1 fails at x={x:?}: x▷x={xx:?}"))
}

fn q2<Q: Quandle>(q: &Q, tol: f64, x: &Q::Elem, y: &Q::Elem) -> Outcome {
    let a = q.op_inv(&q.op(x, y), y);
    let b = q.op(&q.op_inv(x, y), y);
    let res = q.distance(&a, x).max(q.distance(&b, x));
    Outcome::check(q.mode(), tol, res, || {
        format!("Q2 fails at x={x:?}, y={y:?}: (x▷y)▷⁻¹y={a:?}, (x▷⁻¹y)▷y={b:?}")
    })
}

fn q3<Q: Quandle>(q: &Q, tol: f64, x: &Q::Elem, y: &Q::Elem, z: &Q::Elem) -> Outcome {
    let lhs = q.op(&q.op(x, y), z);
    let rhs = q.op(&q.op(x, z), &q.op(y, z));
    Outcome::check(q.mode(), tol, q.distance(&lhs, &rhs), || {
        format!("Q3 fails at x={x:?}, y={y:?}, z={z:?}: {lhs:?} vs {rhs:?}")
    })
}

/// Checks Q1 (idempotence), Q2 (right translations invertible, via `op_inv`
/// round trips) and Q3 (right distributivity). Finite carriers are checked
/// exhaustively; otherwise `samples` seeded triples are drawn.
pub fn check_axioms<Q: Quandle>(q: &Q, samples: usize, seed: u64, tol: f64) -> VerificationReport {
    let name = format!("axioms {}", q.name());
    if let Some(elems) = q.elements() {
        let mut outcomes = Vec::new();
        for x in &elems {
            outcomes.push(q1(q, tol, x));
            for y in &elems {
                outcomes.push(q2(q, tol, x, y));
                for z in &elems {
                    outcomes.push(q3(q, tol, x, y, z));
                }
            }
        }
        return VerificationReport::from_outcomes(name, q.mode(), seed, tol, true, outcomes);
    }
    let outcomes = run_partitioned(samples, seed, |rng| {
        let (x, y, z) = (q.sample(rng), q.sample(rng), q.sample(rng));
        Outcome::worst([q1(q, tol, &x), q2(q, tol, &x, &y), q3(q, tol, &x, &y, &z)])
    });
    VerificationReport::from_outcomes(name, q.mode(), seed, tol, false, outcomes)
}
