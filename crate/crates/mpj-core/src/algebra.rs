//! Structure-constant representation of a two-product algebra
//! (an antisymmetric bracket and a symmetric Jordan-style product),
//! axiom verification, center and ideal closure.

use crate::exactlin::{kernel, QMatrix, QVec, Subspace};
use crate::rational::{format_rat, Rat};
use num::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Seed for the pseudorandom unlinearized smoke tests. Fixed so runs are
/// reproducible; the CLI can override it.
pub const DEFAULT_SMOKE_SEED: u64 = 0x4d50_4a2d_5345_4544;

const SMOKE_VECTOR_TUPLES: usize = 32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("vector has dimension {got}, algebra has dimension {want}")]
    DimensionMismatch { got: usize, want: usize },
    #[error("structure constant index ({i},{j},{k}) out of range for dimension {dim}")]
    IndexOutOfRange { i: usize, j: usize, k: usize, dim: usize },
    #[error("bracket entries must have i < j, got ({i},{j})")]
    BracketIndexOrder { i: usize, j: usize },
    #[error("jordan entries must have i <= j, got ({i},{j})")]
    JordanIndexOrder { i: usize, j: usize },
    #[error("bracket constants are not antisymmetric at ({i},{j},{k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },
    #[error("jordan constants are not symmetric at ({i},{j},{k})")]
    NotSymmetric { i: usize, j: usize, k: usize },
    #[error("expected {want} basis names, got {got}")]
    BadBasisNames { got: usize, want: usize },
    #[error("subspace is not closed under the products: {witness}")]
    NotClosed { witness: String },
}

/// Dense rank-3 tensor of structure constants, indexed c[i][j][k].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor3 {
    dim: usize,
    data: Vec<Rat>,
}

impl Tensor3 {
    pub fn zero(dim: usize) -> Self {
        Tensor3 { dim, data: vec![Rat::zero(); dim * dim * dim] }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.data[(i * self.dim + j) * self.dim + k]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Rat) {
        self.data[(i * self.dim + j) * self.dim + k] = v;
    }

    /// The vector-valued product of basis elements i and j, as a slice of
    /// coordinates over the basis.
    #[inline]
    pub fn pair(&self, i: usize, j: usize) -> &[Rat] {
        let base = (i * self.dim + j) * self.dim;
        &self.data[base..base + self.dim]
    }

    pub fn is_all_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

/// A finite-dimensional algebra with two products given by structure
/// constants over the rationals: an antisymmetric bracket and a symmetric
/// juxtaposition ("jordan") product.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraSpec {
    dim: usize,
    basis_names: Vec<String>,
    bracket: Tensor3,
    jordan: Tensor3,
}

/// One structure-constant entry: the coefficient of basis vector `k` in
/// the product of basis vectors `i` and `j`.
pub type Entry = (usize, usize, usize, Rat);

impl AlgebraSpec {
    /// Builds an algebra from sparse entries. Bracket entries must have
    /// i < j (the i > j mirror is derived by antisymmetry and i = j is
    /// forced zero); jordan entries must have i <= j. This makes the
    /// anti/symmetry invariants unviolable by construction.
    pub fn from_entries(
        dim: usize,
        basis_names: Vec<String>,
        bracket_entries: &[Entry],
        jordan_entries: &[Entry],
    ) -> Result<Self, AlgebraError> {
        if basis_names.len() != dim {
            return Err(AlgebraError::BadBasisNames { got: basis_names.len(), want: dim });
        }
        let mut bracket = Tensor3::zero(dim);
        for &(i, j, k, ref c) in bracket_entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(AlgebraError::IndexOutOfRange { i, j, k, dim });
            }
            if i >= j {
                return Err(AlgebraError::BracketIndexOrder { i, j });
            }
            let v = bracket.get(i, j, k) + c;
            bracket.set(j, i, k, -v.clone());
            bracket.set(i, j, k, v);
        }
        let mut jordan = Tensor3::zero(dim);
        for &(i, j, k, ref c) in jordan_entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(AlgebraError::IndexOutOfRange { i, j, k, dim });
            }
            if i > j {
                return Err(AlgebraError::JordanIndexOrder { i, j });
            }
            let v = jordan.get(i, j, k) + c;
            if i != j {
                jordan.set(j, i, k, v.clone());
            }
            jordan.set(i, j, k, v);
        }
        Ok(AlgebraSpec { dim, basis_names, bracket, jordan })
    }

    /// i64 convenience constructor for tests and generators.
    pub fn from_i64_entries(
        dim: usize,
        basis_names: &[&str],
        bracket_entries: &[(usize, usize, usize, i64)],
        jordan_entries: &[(usize, usize, usize, i64)],
    ) -> Result<Self, AlgebraError> {
        let conv = |es: &[(usize, usize, usize, i64)]| -> Vec<Entry> {
            es.iter().map(|&(i, j, k, c)| (i, j, k, crate::rational::rat(c))).collect()
        };
        Self::from_entries(
            dim,
            basis_names.iter().map(|s| s.to_string()).collect(),
            &conv(bracket_entries),
            &conv(jordan_entries),
        )
    }

    /// Builds from dense tensors, rejecting constants that violate the
    /// antisymmetry/symmetry invariants.
    pub fn from_dense(
        basis_names: Vec<String>,
        bracket: Tensor3,
        jordan: Tensor3,
    ) -> Result<Self, AlgebraError> {
        let a = Self::from_dense_unchecked(basis_names, bracket, jordan)?;
        for i in 0..a.dim {
            for j in 0..a.dim {
                for k in 0..a.dim {
                    if *a.bracket.get(i, j, k) != -a.bracket.get(j, i, k).clone() {
                        return Err(AlgebraError::NotAntisymmetric { i, j, k });
                    }
                    if a.jordan.get(i, j, k) != a.jordan.get(j, i, k) {
                        return Err(AlgebraError::NotSymmetric { i, j, k });
                    }
                }
            }
        }
        Ok(a)
    }

    /// Builds from dense tensors without checking the anti/symmetry
    /// invariants. Intended for diagnostics (e.g. perturbation studies);
    /// `verify_axioms` reports any violation as a failed verdict rather
    /// than an error.
    pub fn from_dense_unchecked(
        basis_names: Vec<String>,
        bracket: Tensor3,
        jordan: Tensor3,
    ) -> Result<Self, AlgebraError> {
        let dim = bracket.dim;
        if jordan.dim != dim {
            return Err(AlgebraError::DimensionMismatch { got: jordan.dim, want: dim });
        }
        if basis_names.len() != dim {
            return Err(AlgebraError::BadBasisNames { got: basis_names.len(), want: dim });
        }
        Ok(AlgebraSpec { dim, basis_names, bracket, jordan })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn bracket_constants(&self) -> &Tensor3 {
        &self.bracket
    }

    pub fn jordan_constants(&self) -> &Tensor3 {
        &self.jordan
    }

    fn check_dim(&self, v: &QVec) -> Result<(), AlgebraError> {
        if v.dim() != self.dim {
            return Err(AlgebraError::DimensionMismatch { got: v.dim(), want: self.dim });
        }
        Ok(())
    }

    /// Bilinear extension of the bracket structure constants.
    pub fn bracket(&self, u: &QVec, v: &QVec) -> Result<QVec, AlgebraError> {
        self.check_dim(u)?;
        self.check_dim(v)?;
        Ok(bilinear(&self.bracket, u, v))
    }

    /// Bilinear extension of the jordan structure constants.
    pub fn jordan_prod(&self, u: &QVec, v: &QVec) -> Result<QVec, AlgebraError> {
        self.check_dim(u)?;
        self.check_dim(v)?;
        Ok(bilinear(&self.jordan, u, v))
    }

    /// The matrix of ad(h): x -> [h, x] acting on coordinate columns.
    pub fn ad_matrix(&self, h: &QVec) -> Result<QMatrix, AlgebraError> {
        self.check_dim(h)?;
        let n = self.dim;
        let mut m = QMatrix::zero(n, n);
        for j in 0..n {
            let col = self.bracket(h, &QVec::unit(n, j))?;
            for k in 0..n {
                m.set(k, j, col.coords[k].clone());
            }
        }
        Ok(m)
    }

    /// Block-diagonal direct sum: all cross products zero.
    pub fn direct_sum(&self, other: &AlgebraSpec) -> AlgebraSpec {
        let n = self.dim + other.dim;
        let mut bracket = Tensor3::zero(n);
        let mut jordan = Tensor3::zero(n);
        let copy = |t: &mut Tensor3, src: &Tensor3, off: usize| {
            for i in 0..src.dim {
                for j in 0..src.dim {
                    for k in 0..src.dim {
                        let c = src.get(i, j, k);
                        if !c.is_zero() {
                            t.set(i + off, j + off, k + off, c.clone());
                        }
                    }
                }
            }
        };
        copy(&mut bracket, &self.bracket, 0);
        copy(&mut bracket, &other.bracket, self.dim);
        copy(&mut jordan, &self.jordan, 0);
        copy(&mut jordan, &other.jordan, self.dim);
        let mut names: Vec<String> = self.basis_names.iter().map(|s| format!("{s}.1")).collect();
        names.extend(other.basis_names.iter().map(|s| format!("{s}.2")));
        AlgebraSpec { dim: n, basis_names: names, bracket, jordan }
    }

    /// Center Z = {v : [v, P] = vP = 0}, as the kernel of the stacked
    /// multiplication maps by all basis vectors.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let mut rows = Vec::with_capacity(2 * n * n);
        for j in 0..n {
            for k in 0..n {
                // row of v -> [v, b_j]_k and of v -> (v b_j)_k
                let br = QVec { coords: (0..n).map(|i| self.bracket.get(i, j, k).clone()).collect() };
                let jo = QVec { coords: (0..n).map(|i| self.jordan.get(i, j, k).clone()).collect() };
                rows.push(br);
                rows.push(jo);
            }
        }
        kernel(&QMatrix::from_rows(rows, n))
    }

    /// Least subspace containing `s` closed under multiplication (both
    /// products, both sides) by every basis vector. Closure under basis
    /// multiplications already implies subalgebra closure by bilinearity.
    /// Terminates in at most `dim` rounds since the dimension strictly
    /// grows until the fixpoint.
    pub fn ideal_closure(&self, s: &Subspace) -> Result<Subspace, AlgebraError> {
        if s.ambient_dim() != self.dim {
            return Err(AlgebraError::DimensionMismatch { got: s.ambient_dim(), want: self.dim });
        }
        let n = self.dim;
        let mut current = s.clone();
        loop {
            let mut rows: Vec<QVec> = current.basis().to_vec();
            for v in current.basis() {
                for j in 0..n {
                    let b = QVec::unit(n, j);
                    rows.push(self.bracket(v, &b)?);
                    rows.push(self.jordan_prod(v, &b)?);
                }
            }
            let next = Subspace::span(&rows, n);
            if next.dim() == current.dim() {
                return Ok(next);
            }
            current = next;
        }
    }

    /// Re-expresses both products in the RREF basis of `s` as a standalone
    /// algebra. Errors with a witness if `s` is not closed.
    pub fn subalgebra_on_subspace(&self, s: &Subspace) -> Result<AlgebraSpec, AlgebraError> {
        if s.ambient_dim() != self.dim {
            return Err(AlgebraError::DimensionMismatch { got: s.ambient_dim(), want: self.dim });
        }
        let m = s.dim();
        let mut bracket = Tensor3::zero(m);
        let mut jordan = Tensor3::zero(m);
        for (i, u) in s.basis().iter().enumerate() {
            for (j, v) in s.basis().iter().enumerate() {
                let br = self.bracket(u, v)?;
                let coords = s.coordinates_of(&br).ok_or_else(|| AlgebraError::NotClosed {
                    witness: format!("bracket of basis vectors {i} and {j} leaves the subspace: {br:?}"),
                })?;
                for (k, c) in coords.into_iter().enumerate() {
                    bracket.set(i, j, k, c);
                }
                let jo = self.jordan_prod(u, v)?;
                let coords = s.coordinates_of(&jo).ok_or_else(|| AlgebraError::NotClosed {
                    witness: format!("jordan product of basis vectors {i} and {j} leaves the subspace: {jo:?}"),
                })?;
                for (k, c) in coords.into_iter().enumerate() {
                    jordan.set(i, j, k, c);
                }
            }
        }
        let names = (0..m).map(|i| format!("u{i}")).collect();
        Ok(AlgebraSpec { dim: m, basis_names: names, bracket, jordan })
    }

    /// Full axiom verification with the default smoke-test seed.
    pub fn verify_axioms(&self) -> AxiomReport {
        self.verify_axioms_seeded(DEFAULT_SMOKE_SEED)
    }

    /// Checks, on all basis tuples: anti/symmetry of the constants, the
    /// full linearization of the Malcev identity, the full linearization
    /// of the Jordan identity, and the Leibniz identity. Over the
    /// rationals (char 0) an identity holds iff its full linearization
    /// holds on a basis, so these scans are complete. Additionally runs
    /// the unlinearized Malcev and Jordan identities on pseudorandom
    /// rational vectors as a guard against linearization bugs.
    pub fn verify_axioms_seeded(&self, smoke_seed: u64) -> AxiomReport {
        AxiomReport {
            anticommutative: self.check_anticommutative(),
            malcev_identity: self.check_malcev(smoke_seed),
            jordan_commutative: self.check_jordan_commutative(),
            jordan_identity: self.check_jordan(smoke_seed),
            leibniz: self.check_leibniz(),
        }
    }

    fn check_anticommutative(&self) -> Verdict {
        let n = self.dim;
        for i in 0..n {
            for k in 0..n {
                if !self.bracket.get(i, i, k).is_zero() {
                    return Verdict::fail_at(
                        "bracket constant on a repeated index is nonzero ([x,x] != 0)",
                        vec![i, i, k],
                        QVec { coords: self.bracket.pair(i, i).to_vec() },
                    );
                }
            }
            for j in 0..n {
                for k in 0..n {
                    let defect = self.bracket.get(i, j, k) + self.bracket.get(j, i, k);
                    if !defect.is_zero() {
                        let d = QVec {
                            coords: (0..n)
                                .map(|t| self.bracket.get(i, j, t) + self.bracket.get(j, i, t))
                                .collect(),
                        };
                        return Verdict::fail_at(
                            "bracket constants are not antisymmetric",
                            vec![i, j, k],
                            d,
                        );
                    }
                }
            }
        }
        Verdict::Pass
    }

    fn check_jordan_commutative(&self) -> Verdict {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.jordan.get(i, j, k) != self.jordan.get(j, i, k) {
                        let d = QVec {
                            coords: (0..n)
                                .map(|t| self.jordan.get(i, j, t) - self.jordan.get(j, i, t))
                                .collect(),
                        };
                        return Verdict::fail_at(
                            "jordan constants are not symmetric",
                            vec![i, j, k],
                            d,
                        );
                    }
                }
            }
        }
        Verdict::Pass
    }

    /// Jacobian J(b_i, b_j, b_l) = [[b_i,b_j],b_l] - [[b_i,b_l],b_j] - [b_i,[b_j,b_l]].
    pub fn jacobian_basis(&self, i: usize, j: usize, l: usize) -> QVec {
        let n = self.dim;
        let mut out = QVec::zero(n);
        for m in 0..n {
            let c1 = self.bracket.get(i, j, m);
            if !c1.is_zero() {
                out = add_scaled_slice(out, c1, self.bracket.pair(m, l));
            }
            let c2 = self.bracket.get(i, l, m);
            if !c2.is_zero() {
                out = sub_scaled_slice(out, c2, self.bracket.pair(m, j));
            }
            let c3 = self.bracket.get(j, l, m);
            if !c3.is_zero() {
                out = sub_scaled_slice(out, c3, self.bracket.pair(i, m));
            }
        }
        out
    }

    /// Jacobian on arbitrary vectors.
    pub fn jacobian(&self, x: &QVec, y: &QVec, z: &QVec) -> Result<QVec, AlgebraError> {
        let a = self.bracket(&self.bracket(x, y)?, z)?;
        let b = self.bracket(&self.bracket(x, z)?, y)?;
        let c = self.bracket(x, &self.bracket(y, z)?)?;
        Ok(a.sub(&b).sub(&c))
    }

    fn check_malcev(&self, smoke_seed: u64) -> Verdict {
        let n = self.dim;
        // jac[i][j][l] cached as a flat table
        let mut jac: Vec<QVec> = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    jac.push(self.jacobian_basis(i, j, l));
                }
            }
        }
        let jac_at = |i: usize, j: usize, l: usize| &jac[(i * n + j) * n + l];
        // bilinear-in-x polarization of [J(x,y,z),x] - J(x,y,[x,z]):
        // F(a,b) + F(b,a) with F(a,b) = [J(a,y,z),b] - J(a,y,[b,z])
        let half = |a: usize, b: usize, y: usize, z: usize| -> QVec {
            let mut out = QVec::zero(n);
            let jv = jac_at(a, y, z);
            for (m, c) in jv.coords.iter().enumerate() {
                if !c.is_zero() {
                    out = add_scaled_slice(out, c, self.bracket.pair(m, b));
                }
            }
            for m in 0..n {
                let c = self.bracket.get(b, z, m);
                if !c.is_zero() {
                    out = sub_scaled_vec(out, c, jac_at(a, y, m));
                }
            }
            out
        };
        for a in 0..n {
            for b in a..n {
                for y in 0..n {
                    for z in 0..n {
                        let defect = half(a, b, y, z).add(&half(b, a, y, z));
                        if !defect.is_zero() {
                            return Verdict::fail_at(
                                "linearized Malcev identity fails on a basis tuple (x1,x2,y,z)",
                                vec![a, b, y, z],
                                defect,
                            );
                        }
                    }
                }
            }
        }
        // unlinearized smoke test on pseudorandom vectors
        let mut rng = smoke_rng(smoke_seed, 0x4d);
        for t in 0..SMOKE_VECTOR_TUPLES {
            let x = random_vec(&mut rng, n);
            let y = random_vec(&mut rng, n);
            let z = random_vec(&mut rng, n);
            let lhs = self
                .bracket(&self.jacobian(&x, &y, &z).unwrap(), &x)
                .unwrap();
            let rhs = self.jacobian(&x, &y, &self.bracket(&x, &z).unwrap()).unwrap();
            let defect = lhs.sub(&rhs);
            if !defect.is_zero() {
                return Verdict::fail_smoke(
                    format!("unlinearized Malcev identity fails on pseudorandom tuple {t}"),
                    defect,
                );
            }
        }
        Verdict::Pass
    }

    fn check_jordan(&self, smoke_seed: u64) -> Verdict {
        let n = self.dim;
        if self.jordan.is_all_zero() {
            // the zero product satisfies the Jordan identity identically
            return Verdict::Pass;
        }
        // F(a,b,y,c) = ((a b) y) c - (a b)(y c); the Jordan identity
        // (x^2 y) x = x^2 (y x) is F(x,x,y,x), cubic in x. Its full
        // polarization is the sum of F over the six orderings of the
        // three x-slots.
        let f_term = |a: usize, b: usize, y: usize, c: usize| -> QVec {
            let mut out = QVec::zero(n);
            for m in 0..n {
                let ab = self.jordan.get(a, b, m);
                if ab.is_zero() {
                    continue;
                }
                for p in 0..n {
                    let my = self.jordan.get(m, y, p);
                    if !my.is_zero() {
                        let coef = ab * my;
                        out = add_scaled_slice(out, &coef, self.jordan.pair(p, c));
                    }
                    let yc = self.jordan.get(y, c, p);
                    if !yc.is_zero() {
                        let coef = ab * yc;
                        out = sub_scaled_slice(out, &coef, self.jordan.pair(m, p));
                    }
                }
            }
            out
        };
        for x1 in 0..n {
            for x2 in x1..n {
                for x3 in x2..n {
                    for y in 0..n {
                        let mut defect = QVec::zero(n);
                        for (a, b, c) in [
                            (x1, x2, x3),
                            (x1, x3, x2),
                            (x2, x1, x3),
                            (x2, x3, x1),
                            (x3, x1, x2),
                            (x3, x2, x1),
                        ] {
                            defect = defect.add(&f_term(a, b, y, c));
                        }
                        if !defect.is_zero() {
                            return Verdict::fail_at(
                                "linearized Jordan identity fails on a basis tuple (x1,x2,x3,y)",
                                vec![x1, x2, x3, y],
                                defect,
                            );
                        }
                    }
                }
            }
        }
        let mut rng = smoke_rng(smoke_seed, 0x4a);
        for t in 0..SMOKE_VECTOR_TUPLES {
            let x = random_vec(&mut rng, n);
            let y = random_vec(&mut rng, n);
            let x2 = self.jordan_prod(&x, &x).unwrap();
            let lhs = self.jordan_prod(&self.jordan_prod(&x2, &y).unwrap(), &x).unwrap();
            let rhs = self.jordan_prod(&x2, &self.jordan_prod(&y, &x).unwrap()).unwrap();
            let defect = lhs.sub(&rhs);
            if !defect.is_zero() {
                return Verdict::fail_smoke(
                    format!("unlinearized Jordan identity fails on pseudorandom tuple {t}"),
                    defect,
                );
            }
        }
        Verdict::Pass
    }

    fn check_leibniz(&self) -> Verdict {
        let n = self.dim;
        if self.jordan.is_all_zero() {
            return Verdict::Pass;
        }
        // [b_i, b_j b_l] = [b_i, b_j] b_l + b_j [b_i, b_l]; multilinear,
        // so basis triples suffice.
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let mut defect = QVec::zero(n);
                    for m in 0..n {
                        let c = self.jordan.get(j, l, m);
                        if !c.is_zero() {
                            defect = add_scaled_slice(defect, c, self.bracket.pair(i, m));
                        }
                        let c = self.bracket.get(i, j, m);
                        if !c.is_zero() {
                            defect = sub_scaled_slice(defect, c, self.jordan.pair(m, l));
                        }
                        let c = self.bracket.get(i, l, m);
                        if !c.is_zero() {
                            defect = sub_scaled_slice(defect, c, self.jordan.pair(j, m));
                        }
                    }
                    if !defect.is_zero() {
                        return Verdict::fail_at(
                            "Leibniz identity fails on a basis triple (x,y,z)",
                            vec![i, j, l],
                            defect,
                        );
                    }
                }
            }
        }
        Verdict::Pass
    }

    /// A basis triple with nonzero Jacobian, if one exists. `None` means
    /// the bracket satisfies the Jacobi identity (is a Lie bracket).
    pub fn non_lie_certificate(&self) -> Option<(usize, usize, usize, QVec)> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let jac = self.jacobian_basis(i, j, l);
                    if !jac.is_zero() {
                        return Some((i, j, l, jac));
                    }
                }
            }
        }
        None
    }
}

fn bilinear(t: &Tensor3, u: &QVec, v: &QVec) -> QVec {
    let n = t.dim;
    let mut out = QVec::zero(n);
    for (i, ui) in u.coords.iter().enumerate() {
        if ui.is_zero() {
            continue;
        }
        for (j, vj) in v.coords.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            let c = ui * vj;
            out = add_scaled_slice(out, &c, t.pair(i, j));
        }
    }
    out
}

fn add_scaled_slice(mut acc: QVec, c: &Rat, slice: &[Rat]) -> QVec {
    for (a, s) in acc.coords.iter_mut().zip(slice) {
        if !s.is_zero() {
            *a += c * s;
        }
    }
    acc
}

fn sub_scaled_slice(mut acc: QVec, c: &Rat, slice: &[Rat]) -> QVec {
    for (a, s) in acc.coords.iter_mut().zip(slice) {
        if !s.is_zero() {
            *a -= c * s;
        }
    }
    acc
}

fn sub_scaled_vec(acc: QVec, c: &Rat, v: &QVec) -> QVec {
    sub_scaled_slice(acc, c, &v.coords)
}

fn smoke_rng(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (salt.wrapping_mul(0x9e37_79b9_7f4a_7c15)))
}

fn random_vec(rng: &mut ChaCha8Rng, n: usize) -> QVec {
    QVec {
        coords: (0..n)
            .map(|_| {
                let num = rng.gen_range(-9i64..=9);
                let den = rng.gen_range(1i64..=4);
                crate::rational::ratio(num, den)
            })
            .collect(),
    }
}

/// Outcome of a single axiom check: pass, or fail with a witness tuple of
/// basis indices and the nonzero defect vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    Pass,
    Fail(Witness),
}

impl Verdict {
    fn fail_at(what: &str, indices: Vec<usize>, defect: QVec) -> Verdict {
        Verdict::Fail(Witness { description: what.to_string(), indices, defect })
    }

    fn fail_smoke(what: String, defect: QVec) -> Verdict {
        Verdict::Fail(Witness { description: what, indices: Vec::new(), defect })
    }

    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(w) => Some(w),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub description: String,
    /// Basis indices of the violating tuple; empty for the pseudorandom
    /// smoke tests.
    pub indices: Vec<usize>,
    pub defect: QVec,
}

impl Witness {
    pub fn render(&self, basis_names: &[String]) -> String {
        let at: Vec<&str> = self.indices.iter().map(|&i| basis_names[i].as_str()).collect();
        let defect: Vec<String> = self.defect.coords.iter().map(format_rat).collect();
        format!("{} at ({}); defect [{}]", self.description, at.join(","), defect.join(","))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AxiomReport {
    pub anticommutative: Verdict,
    pub malcev_identity: Verdict,
    pub jordan_commutative: Verdict,
    pub jordan_identity: Verdict,
    pub leibniz: Verdict,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.verdicts().iter().all(|(_, v)| v.passed())
    }

    pub fn verdicts(&self) -> Vec<(&'static str, &Verdict)> {
        vec![
            ("anticommutative", &self.anticommutative),
            ("malcev_identity", &self.malcev_identity),
            ("jordan_commutative", &self.jordan_commutative),
            ("jordan_identity", &self.jordan_identity),
            ("leibniz", &self.leibniz),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, Family};
    use crate::rational::rat;

    fn sl2() -> AlgebraSpec {
        generate(Family::LieSl2).unwrap().algebra
    }

    #[test]
    fn bracket_of_sl2_generators() {
        let a = sl2();
        let h = QVec::from_i64(&[1, 0, 0]);
        let e = QVec::from_i64(&[0, 1, 0]);
        assert_eq!(a.bracket(&h, &e).unwrap(), e.scale(&rat(2)));
    }

    #[test]
    fn bracket_is_alternating_and_bilinear() {
        let a = sl2();
        let u = QVec::from_i64(&[1, 2, -3]);
        assert!(a.bracket(&u, &u).unwrap().is_zero());
        assert!(a.bracket(&QVec::zero(3), &u).unwrap().is_zero());
    }

    #[test]
    fn jordan_prod_is_symmetric() {
        let a = AlgebraSpec::from_i64_entries(
            2,
            &["x", "y"],
            &[],
            &[(0, 1, 0, 3), (1, 1, 1, 2)],
        )
        .unwrap();
        let u = QVec::from_i64(&[1, 2]);
        let v = QVec::from_i64(&[-1, 5]);
        assert_eq!(a.jordan_prod(&u, &v).unwrap(), a.jordan_prod(&v, &u).unwrap());
        assert!(a.jordan_prod(&u, &QVec::zero(2)).unwrap().is_zero());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = sl2();
        let short = QVec::from_i64(&[1, 2]);
        assert!(matches!(
            a.bracket(&short, &QVec::zero(3)),
            Err(AlgebraError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn sl2_passes_all_axioms() {
        assert!(sl2().verify_axioms().all_passed());
    }

    #[test]
    fn injected_jordan_constant_breaks_leibniz() {
        // d[e][e][h] = 1 on top of the sl2 bracket: [e, e e] = [e, h] = -2e
        // but [e,e] e + e [e,e] = 0
        let a = AlgebraSpec::from_i64_entries(
            3,
            &["h", "e", "f"],
            &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)],
            &[(1, 1, 0, 1)],
        )
        .unwrap();
        let report = a.verify_axioms();
        let w = report.leibniz.witness().expect("leibniz must fail");
        // first violating triple: [h, e e] = [h, h] = 0 but
        // [h,e] e + e [h,e] = 4 e e = 4h
        assert_eq!(w.indices, vec![0, 1, 1]);
        assert_eq!(w.defect, QVec::from_i64(&[-4, 0, 0]));
        // the witness re-evaluates to the same nonzero defect
        let h = QVec::unit(3, 0);
        let e = QVec::unit(3, 1);
        let lhs = a.bracket(&h, &a.jordan_prod(&e, &e).unwrap()).unwrap();
        let rhs = a
            .jordan_prod(&a.bracket(&h, &e).unwrap(), &e)
            .unwrap()
            .add(&a.jordan_prod(&e, &a.bracket(&h, &e).unwrap()).unwrap());
        assert_eq!(lhs.sub(&rhs), w.defect);
    }

    #[test]
    fn unchecked_asymmetric_constants_fail_the_constant_verdicts() {
        let mut bracket = Tensor3::zero(2);
        bracket.set(0, 1, 0, rat(1)); // mirror not set
        let a = AlgebraSpec::from_dense_unchecked(
            vec!["a".into(), "b".into()],
            bracket,
            Tensor3::zero(2),
        )
        .unwrap();
        assert!(!a.verify_axioms().anticommutative.passed());
    }

    #[test]
    fn center_of_abelian_is_everything() {
        let a = generate(Family::Abelian(3)).unwrap().algebra;
        assert_eq!(a.center(), Subspace::full(3));
    }

    #[test]
    fn center_of_sl2_is_zero() {
        assert!(sl2().center().is_zero());
    }

    #[test]
    fn center_of_sl2_plus_line_is_the_line() {
        let a = sl2().direct_sum(&generate(Family::Abelian(1)).unwrap().algebra);
        let line = Subspace::span(&[QVec::from_i64(&[0, 0, 0, 1])], 4);
        assert_eq!(a.center(), line);
    }

    #[test]
    fn ideal_closure_basics() {
        let a = sl2();
        assert!(a.ideal_closure(&Subspace::zero(3)).unwrap().is_zero());
        let e_line = Subspace::span(&[QVec::from_i64(&[0, 1, 0])], 3);
        assert_eq!(a.ideal_closure(&e_line).unwrap(), Subspace::full(3));
    }

    #[test]
    fn ideal_closure_respects_blocks() {
        let a = sl2().direct_sum(&sl2());
        let e1 = Subspace::span(&[QVec::from_i64(&[0, 1, 0, 0, 0, 0])], 6);
        let first_block = Subspace::span(
            &[
                QVec::from_i64(&[1, 0, 0, 0, 0, 0]),
                QVec::from_i64(&[0, 1, 0, 0, 0, 0]),
                QVec::from_i64(&[0, 0, 1, 0, 0, 0]),
            ],
            6,
        );
        assert_eq!(a.ideal_closure(&e1).unwrap(), first_block);
    }

    #[test]
    fn direct_sum_identities_hold_blockwise() {
        let a = sl2();
        let b = generate(Family::Abelian(2)).unwrap().algebra;
        let s = a.direct_sum(&b);
        assert_eq!(s.dim(), 5);
        assert!(s.verify_axioms().all_passed());
        assert_eq!(s.center().dim(), a.center().dim() + b.center().dim());
    }

    #[test]
    fn subalgebra_extraction() {
        let a = sl2().direct_sum(&sl2());
        let first_block = Subspace::span(
            &[
                QVec::from_i64(&[1, 0, 0, 0, 0, 0]),
                QVec::from_i64(&[0, 1, 0, 0, 0, 0]),
                QVec::from_i64(&[0, 0, 1, 0, 0, 0]),
            ],
            6,
        );
        let block = a.subalgebra_on_subspace(&first_block).unwrap();
        assert_eq!(block.bracket_constants(), sl2().bracket_constants());
        // the full space always extracts to the same constants
        let whole = a.subalgebra_on_subspace(&Subspace::full(6)).unwrap();
        assert_eq!(whole.bracket_constants(), a.bracket_constants());
    }

    #[test]
    fn span_of_e_is_an_abelian_subalgebra_of_sl2() {
        // [e,e] = 0 and e e = 0, so NotClosed must not fire
        let e_line = Subspace::span(&[QVec::from_i64(&[0, 1, 0])], 3);
        let sub = sl2().subalgebra_on_subspace(&e_line).unwrap();
        assert_eq!(sub.dim(), 1);
        assert!(sub.bracket_constants().is_all_zero());
        assert!(sub.jordan_constants().is_all_zero());
    }

    #[test]
    fn not_closed_has_a_witness() {
        // span{h, e} is a subalgebra for the bracket but span{e, f} is not
        let ef = Subspace::span(&[QVec::from_i64(&[0, 1, 0]), QVec::from_i64(&[0, 0, 1])], 3);
        assert!(matches!(
            sl2().subalgebra_on_subspace(&ef),
            Err(AlgebraError::NotClosed { .. })
        ));
    }
}
