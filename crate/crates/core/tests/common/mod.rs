//! Random instance generators shared by the property and acceptance tests.
//!
//! Algebras come from a family of two-step nilpotent Jacobi-Jordan algebras
//! (all products of products vanish), Yau-twisted by an endomorphism and
//! written in a random basis.

#![allow(dead_code)]

use hjj_core::algebra::{BilinearMap, HomAlgebra};
use hjj_core::cohomology::CochainComplex;
use hjj_core::derivation::{coords_to_map, derivation_space};
use hjj_core::exactlin::nullspace;
use hjj_core::representation::{adjoint_rep, trivial_rep, Representation};
use hjj_core::rotabaxter::{verify_rb, RBOperator};
use hjj_core::{Matrix, Scalar, Subspace, Vector};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn int(rng: &mut impl Rng, lo: i64, hi: i64) -> Scalar {
    Scalar::from_int(rng.gen_range(lo..=hi))
}

fn nonzero(rng: &mut impl Rng, bound: i64) -> Scalar {
    loop {
        let x = rng.gen_range(-bound..=bound);
        if x != 0 {
            return Scalar::from_int(x);
        }
    }
}

/// Small rational entry: mostly integers, sometimes a half or third.
pub fn small(rng: &mut impl Rng) -> Scalar {
    let x = int(rng, -3, 3);
    match rng.gen_range(0..6) {
        0 => x * Scalar::ratio(1, 2),
        1 => x * Scalar::ratio(1, 3),
        _ => x,
    }
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> Matrix {
    let data = (0..rows * cols).map(|_| small(rng)).collect();
    Matrix::new(rows, cols, data).unwrap()
}

pub fn random_vector(rng: &mut impl Rng, n: usize) -> Vector {
    (0..n).map(|_| small(rng)).collect()
}

/// Unit lower-triangular times unit upper-triangular: always invertible.
pub fn random_basis_change(rng: &mut impl Rng, n: usize) -> Matrix {
    let mut l = Matrix::identity(n);
    let mut u = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            l[(i, j)] = int(rng, -1, 1);
            u[(j, i)] = int(rng, -1, 1);
        }
    }
    l.mul(&u)
}

/// Random combination of a subspace basis with small integer coefficients.
pub fn random_member(rng: &mut impl Rng, s: &Subspace) -> Vector {
    let mut v = vec![Scalar::zero(); s.ambient_dim()];
    for b in s.basis_vectors() {
        let c = int(rng, -2, 2);
        for (x, y) in v.iter_mut().zip(&b) {
            *x += &c * y;
        }
    }
    v
}

fn sym_product(dim: usize, entries: &[(usize, usize, usize, Scalar)]) -> BilinearMap {
    let mut m = BilinearMap::zero(dim, dim);
    for (i, j, k, c) in entries {
        m.set(*i, *j, *k, c.clone());
        m.set(*j, *i, *k, c.clone());
    }
    m
}

/// A Hom-Jacobi-Jordan algebra of dimension 1, 2 or 3.
///
/// Basis `(x, z, w)`: `x∗x = c w`, `x∗z = d w`, `z∗z = e w`, twisted by
/// `β(x) = p x + a z + l w`, `β(z) = r z + s w`, `β(w) = p² w`, then conjugated
/// by a random basis change. With `regular` the twist is invertible.
pub fn random_hjj(rng: &mut impl Rng, regular: bool) -> HomAlgebra {
    let dim = rng.gen_range(1..=3usize);
    let p = if regular || rng.gen_bool(0.7) {
        nonzero(rng, 2)
    } else {
        Scalar::zero()
    };
    let (beta, product) = match dim {
        1 => (Matrix::diag(&[p]), BilinearMap::zero(1, 1)),
        2 => {
            let c = int(rng, -2, 2);
            let l = int(rng, -2, 2);
            let q = &p * &p;
            let beta = Matrix::from_rows(vec![vec![p, Scalar::zero()], vec![l, q]], 2);
            (beta, sym_product(2, &[(0, 0, 1, c)]))
        }
        _ => {
            let r = if regular || rng.gen_bool(0.7) {
                nonzero(rng, 2)
            } else {
                Scalar::zero()
            };
            let q = &p * &p;
            let c = int(rng, -2, 2);
            // d and e are allowed only where the twist stays an endomorphism
            let d = if r == p { int(rng, -2, 2) } else { Scalar::zero() };
            let e = if &r * &r == q { int(rng, -2, 2) } else { Scalar::zero() };
            let a = if d.is_zero() && e.is_zero() { int(rng, -1, 1) } else { Scalar::zero() };
            let (l, s) = (int(rng, -2, 2), int(rng, -2, 2));
            let z = Scalar::zero();
            let beta = Matrix::from_rows(
                vec![vec![p, z.clone(), z.clone()], vec![a, r, z.clone()], vec![l, s, q]],
                3,
            );
            (beta, sym_product(3, &[(0, 0, 2, c), (0, 1, 2, d), (1, 1, 2, e)]))
        }
    };
    let twisted = product.post_compose(&beta);
    let g = random_basis_change(rng, dim);
    let g_inv = g.inverse().unwrap();
    HomAlgebra::with_default_labels(twisted.pre_compose(&g, &g).post_compose(&g_inv), g_inv.mul(&beta).mul(&g))
        .unwrap()
}

/// A random commutative Hom-algebra of dimension 1 or 2; usually fails the axioms.
pub fn random_raw_algebra(rng: &mut impl Rng) -> HomAlgebra {
    let n = rng.gen_range(1..=2usize);
    let mut m = BilinearMap::zero(n, n);
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                let c = int(rng, -1, 1);
                m.set(i, j, k, c.clone());
                m.set(j, i, k, c);
            }
        }
    }
    HomAlgebra::with_default_labels(m, random_matrix(rng, n, n)).unwrap()
}

/// Structure constants of a commutative associative algebra of dimension 2.
pub fn random_assoc(rng: &mut impl Rng) -> BilinearMap {
    let c = int(rng, -2, 2);
    if rng.gen_bool(0.5) {
        // basis (1, t) with t·t = c t
        sym_product(
            2,
            &[
                (0, 0, 0, Scalar::one()),
                (0, 1, 1, Scalar::one()),
                (1, 1, 1, c),
            ],
        )
    } else {
        // basis (t, t²) with t·t = c t²
        sym_product(2, &[(0, 0, 1, c)])
    }
}

/// A commutative, multiplicative Hom-associative algebra of dimension 2.
pub fn random_hom_assoc(rng: &mut impl Rng) -> HomAlgebra {
    let c = int(rng, -2, 2);
    let p = int(rng, -2, 2);
    let l = int(rng, -2, 2);
    let beta = Matrix::from_rows(vec![vec![p.clone(), Scalar::zero()], vec![l, &p * &p]], 2);
    let product = sym_product(2, &[(0, 0, 1, c)]).post_compose(&beta);
    let labels = vec!["t".to_string(), "t2".to_string()];
    HomAlgebra::new(labels, product, beta).unwrap()
}

/// Symmetric form: half the time a random one, otherwise a random valid cocycle.
pub fn random_theta(rng: &mut impl Rng, a: &HomAlgebra) -> BilinearMap {
    let n = a.dim();
    if rng.gen_bool(0.5) {
        let mut m = BilinearMap::zero(n, 1);
        for i in 0..n {
            for j in i..n {
                let c = int(rng, -1, 1);
                m.set(i, j, 0, c.clone());
                m.set(j, i, 0, c);
            }
        }
        m
    } else {
        let t = trivial_rep(a);
        let cx = CochainComplex::new(&t);
        let valid = cx.symmetric(2).unwrap().intersect(&cx.cocycles(2).unwrap());
        BilinearMap::from_cochain(&random_member(rng, &valid), n, 1)
    }
}

/// Linear map: half the time random, otherwise a random α¹-antiderivation.
pub fn random_d(rng: &mut impl Rng, a: &HomAlgebra) -> Matrix {
    let n = a.dim();
    if rng.gen_bool(0.5) {
        random_matrix(rng, n, n)
    } else {
        let ader = derivation_space(&adjoint_rep(a, 0).unwrap(), 1, true).unwrap();
        coords_to_map(&random_member(rng, &ader), n, n)
    }
}

/// Maps `T : V → A` with `Tφ = αT`.
pub fn twist_compatible_maps(rep: &Representation) -> Subspace {
    let (da, dv) = (rep.algebra().dim(), rep.dim());
    let alpha = rep.algebra().alpha();
    let phi = rep.phi();
    let mut rows = Vec::new();
    for r in 0..da {
        for c in 0..dv {
            let mut row = vec![Scalar::zero(); da * dv];
            for m in 0..dv {
                row[r * dv + m] += &phi[(m, c)];
            }
            for m in 0..da {
                row[m * dv + c] -= &alpha[(r, m)];
            }
            rows.push(row);
        }
    }
    nullspace(&Matrix::from_rows(rows, da * dv))
}

/// Random operators satisfying the twist condition, kept when the Rota-Baxter identity holds.
pub fn random_rb(rng: &mut impl Rng, rep: &Representation, tries: usize) -> Option<RBOperator> {
    let space = twist_compatible_maps(rep);
    (0..tries).find_map(|_| {
        let mut v = vec![Scalar::zero(); space.ambient_dim()];
        for b in space.basis_vectors() {
            if rng.gen_bool(0.5) {
                let c = int(rng, -1, 1);
                for (x, y) in v.iter_mut().zip(&b) {
                    *x += &c * y;
                }
            }
        }
        let t = Matrix::new(rep.algebra().dim(), rep.dim(), v).unwrap();
        let op = RBOperator::new(rep.clone(), t).unwrap();
        verify_rb(&op).all_hold().then_some(op)
    })
}

/// Maps commuting with α.
pub fn alpha_commutant(a: &HomAlgebra) -> Subspace {
    let n = a.dim();
    let alpha = a.alpha();
    let mut rows = Vec::new();
    for r in 0..n {
        for c in 0..n {
            let mut row = vec![Scalar::zero(); n * n];
            for m in 0..n {
                row[r * n + m] += &alpha[(m, c)];
                row[m * n + c] -= &alpha[(r, m)];
            }
            rows.push(row);
        }
    }
    nullspace(&Matrix::from_rows(rows, n * n))
}

pub fn random_commuting(rng: &mut impl Rng, a: &HomAlgebra) -> Matrix {
    let n = a.dim();
    coords_to_map(&random_member(rng, &alpha_commutant(a)), n, n)
}
