//! Fixed inputs shared by the benchmarks.

use hinfluence::families::{corner, random_grid, tribes};
use hinfluence::rational::ratio;
use hinfluence::{CubeFunction, GridFunction, ProductMeasure};

/// Dense random grid with `res` cells on each of `n` axes.
pub fn random(n: usize, res: usize, seed: u64) -> GridFunction {
    random_grid(vec![res; n], 0.5, seed).unwrap().grid().unwrap().clone()
}

pub fn corner_grid(n: usize) -> GridFunction {
    corner(n, n).unwrap().grid().unwrap().clone()
}

/// Dense copy of the corner set, for comparing against product storage.
pub fn dense_corner(n: usize) -> GridFunction {
    corner_grid(n).to_dense().unwrap()
}

pub fn tribes_cube(n: usize, r: usize) -> (CubeFunction, ProductMeasure) {
    let inst = tribes(n, r, &ratio(1, 3)).unwrap();
    let (f, mu) = inst.cube().unwrap();
    (f.clone(), mu.clone())
}
