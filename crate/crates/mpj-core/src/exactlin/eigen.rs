//! Rational eigen-decomposition of a square rational matrix.
//!
//! Strategy: clear denominators to an integer matrix, compute the
//! characteristic polynomial exactly (Faddeev-LeVerrier), enumerate
//! rational-root candidates via the rational root theorem (the scaled
//! polynomial is monic over the integers, so candidates are integer
//! divisors of the trailing coefficient), confirm each candidate by
//! evaluation, and return the kernel of m - lambda I for each root.

use super::{kernel, QMatrix, Subspace};
use crate::rational::Rat;
use num::bigint::BigInt;
use num::integer::Integer;
use num::{One, Signed, Zero};

/// All rational eigenvalues of a square matrix with their eigenspaces,
/// eigenvalues sorted ascending. An empty list is a legal result.
pub fn rational_eigen(m: &QMatrix) -> Vec<(Rat, Subspace)> {
    assert!(m.is_square(), "rational_eigen needs a square matrix");
    let n = m.row_count();
    if n == 0 {
        return Vec::new();
    }
    // scale: L*m is an integer matrix; eigenvalues scale by L
    let scale = denominator_lcm(m);
    let scaled = scale_matrix(m, &scale);
    let coeffs = char_poly(&scaled); // monic, integer coefficients
    let mut roots = integer_roots(&coeffs);
    roots.sort();
    let mut out = Vec::new();
    for r in roots {
        let lambda = Rat::new(r, scale.clone());
        let shifted = shift_diagonal(m, &lambda);
        let space = kernel(&shifted);
        debug_assert!(!space.is_zero(), "confirmed root must have a nonzero eigenspace");
        out.push((lambda, space));
    }
    out
}

fn denominator_lcm(m: &QMatrix) -> BigInt {
    let mut l = BigInt::one();
    for row in m.rows() {
        for x in &row.coords {
            l = l.lcm(x.denom());
        }
    }
    l
}

fn scale_matrix(m: &QMatrix, scale: &BigInt) -> Vec<Vec<BigInt>> {
    m.rows()
        .iter()
        .map(|row| {
            row.coords
                .iter()
                .map(|x| {
                    let v = x * Rat::from_integer(scale.clone());
                    debug_assert!(v.denom().is_one());
                    v.numer().clone()
                })
                .collect()
        })
        .collect()
}

fn shift_diagonal(m: &QMatrix, lambda: &Rat) -> QMatrix {
    let mut shifted = m.clone();
    for i in 0..m.row_count() {
        let v = shifted.at(i, i) - lambda;
        shifted.set(i, i, v);
    }
    shifted
}

/// Characteristic polynomial of an integer matrix by Faddeev-LeVerrier.
/// Returns coefficients [c_0, ..., c_{n-1}, 1] of
/// x^n + c_{n-1} x^{n-1} + ... + c_0; all divisions are exact.
fn char_poly(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = m.len();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // A_1 = M, c_{n-k} = -tr(M A_{k-1} + c I ...) via the recurrence
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    for k in 1..=n {
        let tr: BigInt = (0..n).map(|i| a[i][i].clone()).sum();
        let (c, rem) = (-tr).div_rem(&BigInt::from(k));
        debug_assert!(rem.is_zero(), "Faddeev-LeVerrier divisions are exact");
        coeffs[n - k] = c.clone();
        if k == n {
            break;
        }
        // A_{k+1} = M (A_k + c I)
        let mut shifted = a;
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] += &c;
        }
        a = int_mat_mul(m, &shifted);
    }
    coeffs
}

fn int_mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

fn eval_poly(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// All integer roots of a monic integer polynomial given as
/// [c_0, ..., c_n] with c_n = 1.
fn integer_roots(coeffs: &[BigInt]) -> Vec<BigInt> {
    let mut roots = Vec::new();
    // strip factors of x
    let mut low = 0;
    while low < coeffs.len() - 1 && coeffs[low].is_zero() {
        low += 1;
    }
    if low > 0 {
        roots.push(BigInt::zero());
    }
    let reduced = &coeffs[low..];
    if reduced.len() <= 1 {
        return roots;
    }
    let trailing = reduced[0].abs();
    debug_assert!(!trailing.is_zero());
    for d in divisors(&trailing) {
        for cand in [d.clone(), -d] {
            if eval_poly(reduced, &cand).is_zero() && !roots.contains(&cand) {
                roots.push(cand);
            }
        }
    }
    roots
}

/// All positive divisors of |n| (n nonzero), from a full factorization.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut divs = vec![BigInt::one()];
    for (p, e) in factorize(n.abs()) {
        let mut next = Vec::with_capacity(divs.len() * (e + 1));
        let mut pk = BigInt::one();
        for _ in 0..=e {
            for d in &divs {
                next.push(d * &pk);
            }
            pk *= &p;
        }
        divs = next;
    }
    divs
}

/// Trial division for small primes, Pollard rho for the rest.
fn factorize(mut n: BigInt) -> Vec<(BigInt, usize)> {
    let mut factors: Vec<(BigInt, usize)> = Vec::new();
    let push = |p: BigInt, factors: &mut Vec<(BigInt, usize)>| {
        if let Some(f) = factors.iter_mut().find(|(q, _)| *q == p) {
            f.1 += 1;
        } else {
            factors.push((p, 1));
        }
    };
    for small in 2u64..=4096 {
        let p = BigInt::from(small);
        if &p * &p > n {
            break;
        }
        while (&n % &p).is_zero() {
            n /= &p;
            push(p.clone(), &mut factors);
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            push(m, &mut factors);
            continue;
        }
        let d = pollard_rho(&m);
        stack.push(m / &d);
        stack.push(d);
    }
    factors.sort();
    factors
}

fn is_probable_prime(n: &BigInt) -> bool {
    if *n < BigInt::from(2) {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigInt::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    // Miller-Rabin with fixed witnesses; deterministic below 3.3e24
    let one = BigInt::one();
    let n_minus_1 = n - &one;
    let mut d = n_minus_1.clone();
    let mut s = 0u32;
    while d.is_even() {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigInt) -> BigInt {
    if n.is_even() {
        return BigInt::from(2);
    }
    let one = BigInt::one();
    let mut c = BigInt::one();
    loop {
        let mut x = BigInt::from(2);
        let mut y = BigInt::from(2);
        let mut d = BigInt::one();
        while d == one {
            x = (&x * &x + &c) % n;
            y = (&y * &y + &c) % n;
            y = (&y * &y + &c) % n;
            let diff = (&x - &y).abs();
            if diff.is_zero() {
                break;
            }
            d = diff.gcd(n);
        }
        if d != one && d != *n {
            return d;
        }
        c += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::QVec;
    use crate::rational::{rat, ratio};

    #[test]
    fn eigen_of_diagonal() {
        let m = QMatrix::from_i64(&[&[2, 0, 0], &[0, -2, 0], &[0, 0, 0]]);
        let eig = rational_eigen(&m);
        let values: Vec<Rat> = eig.iter().map(|(l, _)| l.clone()).collect();
        assert_eq!(values, vec![rat(-2), rat(0), rat(2)]);
        assert_eq!(eig[0].1, Subspace::span(&[QVec::from_i64(&[0, 1, 0])], 3));
        assert_eq!(eig[1].1, Subspace::span(&[QVec::from_i64(&[0, 0, 1])], 3));
        assert_eq!(eig[2].1, Subspace::span(&[QVec::from_i64(&[1, 0, 0])], 3));
    }

    #[test]
    fn rotation_matrix_has_no_rational_eigenvalues() {
        let m = QMatrix::from_i64(&[&[0, -1], &[1, 0]]);
        assert!(rational_eigen(&m).is_empty());
    }

    #[test]
    fn ad_h_of_sl2() {
        // ad(h) in basis (h, e, f): e -> 2e, f -> -2f
        let m = QMatrix::from_i64(&[&[0, 0, 0], &[0, 2, 0], &[0, 0, -2]]);
        let eig = rational_eigen(&m);
        let values: Vec<Rat> = eig.iter().map(|(l, _)| l.clone()).collect();
        assert_eq!(values, vec![rat(-2), rat(0), rat(2)]);
        assert!(eig.iter().all(|(_, s)| s.dim() == 1));
    }

    #[test]
    fn fractional_eigenvalues() {
        // diag(1/2, -3/4)
        let m = QMatrix::from_rows(
            vec![
                QVec { coords: vec![ratio(1, 2), rat(0)] },
                QVec { coords: vec![rat(0), ratio(-3, 4)] },
            ],
            2,
        );
        let eig = rational_eigen(&m);
        let values: Vec<Rat> = eig.iter().map(|(l, _)| l.clone()).collect();
        assert_eq!(values, vec![ratio(-3, 4), ratio(1, 2)]);
    }

    #[test]
    fn eigenvectors_satisfy_definition_exactly() {
        let m = QMatrix::from_i64(&[&[4, 1, 0], &[0, 4, 0], &[0, 0, 7]]);
        // 4 has a 1-dim eigenspace (Jordan block), 7 has 1-dim
        let eig = rational_eigen(&m);
        assert_eq!(eig.len(), 2);
        for (lambda, space) in &eig {
            for v in space.basis() {
                assert_eq!(m.apply(v), v.scale(lambda));
            }
        }
        let total: usize = eig.iter().map(|(_, s)| s.dim()).sum();
        assert_eq!(total, 2, "defective matrix: eigenspace dims must not reach n");
    }

    #[test]
    fn char_poly_of_companion_matrix() {
        // companion of x^3 - 2x - 5
        let m = vec![
            vec![BigInt::from(0), BigInt::from(0), BigInt::from(5)],
            vec![BigInt::from(1), BigInt::from(0), BigInt::from(2)],
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(0)],
        ];
        let coeffs = char_poly(&m);
        let expected: Vec<BigInt> =
            [-5i64, -2, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(coeffs, expected);
    }

    #[test]
    fn divisors_and_factorization() {
        let mut d = divisors(&BigInt::from(12));
        d.sort();
        let expected: Vec<BigInt> = [1i64, 2, 3, 4, 6, 12].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(d, expected);
        // a semiprime beyond the trial-division bound
        let p = BigInt::from(1000003u64);
        let q = BigInt::from(999983u64);
        let f = factorize(&p * &q);
        assert_eq!(f, vec![(q, 1), (p, 1)]);
    }
}
