//! Shared fixtures for the benchmark targets.

use novikov::scalar::FieldDescriptor;
use novikov::SuperAlgebra;

/// d0 = 1, d1 = 2 algebra with uv = -vu = e over the rationals.
pub fn odd_pair_rational() -> SuperAlgebra {
    let q = FieldDescriptor::Rational;
    SuperAlgebra::from_entries(
        1,
        2,
        q,
        &[(1, 2, 0, q.one()), (2, 1, 0, q.integer(-1))],
    )
    .unwrap()
}
