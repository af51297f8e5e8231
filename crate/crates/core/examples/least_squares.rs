//! Distance from a coordinate vector to the span of two geometric vectors.

use oclab::constructors::klee_vectors;
use oclab::linalg::{least_squares_residual, q, FloatMatrix, FloatVector, NormTag};

fn main() -> oclab::Result<()> {
    let fam = klee_vectors(&[q(1, 10), q(1, 5)], 3)?;
    let columns: Vec<FloatVector> = fam.vectors().iter().map(|v| v.to_float()).collect();
    let a = FloatMatrix::from_columns(&columns);
    for i in 0..3 {
        let b = FloatVector::unit(3, i, NormTag::L2);
        println!("dist(e_{i}, span) = {:.12}", least_squares_residual(&a, &b));
    }
    Ok(())
}
