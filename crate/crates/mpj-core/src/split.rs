//! Root-space decomposition relative to a maximal abelian subalgebra H,
//! splitness verification, and the containment lemma for products of
//! root spaces.

use crate::algebra::{AlgebraError, AlgebraSpec};
use crate::exactlin::{rational_eigen, QMatrix, QVec, Subspace};
use crate::rational::{format_rat, Rat};
use num::Zero;
use std::collections::BTreeMap;
use thiserror::Error;

/// A root: the functional α represented by its values (α(h_1),...,α(h_m))
/// on the RREF basis of H. Ordered lexicographically, so sorted root lists
/// are canonical.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Root {
    values: Vec<Rat>,
}

impl Root {
    pub fn new(values: Vec<Rat>) -> Self {
        Root { values }
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn neg(&self) -> Root {
        Root { values: self.values.iter().map(|v| -v).collect() }
    }

    pub fn add(&self, other: &Root) -> Root {
        Root {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn double(&self) -> Root {
        self.add(self)
    }

    /// Value of the functional on an arbitrary element of H, given by its
    /// coordinates in the H-basis.
    pub fn eval(&self, h_coords: &[Rat]) -> Rat {
        self.values
            .iter()
            .zip(h_coords)
            .map(|(a, c)| a * c)
            .fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl std::fmt::Debug for Root {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.values.iter().map(format_rat).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SplitError {
    #[error("H is not abelian for both products: {witness}")]
    NotAbelian { witness: String },
    #[error("algebra is not split over the rationals relative to H: {detail}")]
    NotSplit { detail: String },
    #[error("H is not maximal: P_0 has dimension {zero_dim} but H has dimension {h_dim}")]
    NotMasa { zero_dim: usize, h_dim: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// The decomposition P = H ⊕ (⊕_α P_α) of an algebra relative to H.
#[derive(Clone, Debug)]
pub struct RootDecomposition {
    algebra: AlgebraSpec,
    h: Subspace,
    /// Nonzero roots, sorted lexicographically.
    roots: Vec<Root>,
    spaces: BTreeMap<Root, Subspace>,
    zero_space: Subspace,
}

impl RootDecomposition {
    pub fn algebra(&self) -> &AlgebraSpec {
        &self.algebra
    }

    pub fn h(&self) -> &Subspace {
        &self.h
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn zero_space(&self) -> &Subspace {
        &self.zero_space
    }

    /// P_γ for an arbitrary functional: H for the zero functional, the
    /// stored root space for γ ∈ Λ, the zero subspace otherwise.
    pub fn space_of(&self, gamma: &Root) -> Subspace {
        if gamma.is_zero() {
            return self.zero_space.clone();
        }
        self.spaces
            .get(gamma)
            .cloned()
            .unwrap_or_else(|| Subspace::zero(self.algebra.dim()))
    }

    pub fn root_space(&self, alpha: &Root) -> Option<&Subspace> {
        self.spaces.get(alpha)
    }

    pub fn is_root(&self, gamma: &Root) -> bool {
        self.spaces.contains_key(gamma)
    }

    /// α ∈ Λ ⇒ −α ∈ Λ.
    pub fn is_symmetric(&self) -> bool {
        self.roots.iter().all(|a| self.is_root(&a.neg()))
    }

    /// Every root space is 1-dimensional ("maximal length").
    pub fn is_maximal_length(&self) -> bool {
        self.spaces.values().all(|s| s.dim() == 1)
    }
}

/// Decomposes `a` into joint eigenspaces of ad(h_i) for the RREF basis
/// h_1..h_m of `h`, by successive refinement: start from the whole space
/// and replace every current piece by the eigenspaces of the next ad(h_i)
/// restricted to it.
pub fn root_decomposition(a: &AlgebraSpec, h: &Subspace) -> Result<RootDecomposition, SplitError> {
    let n = a.dim();
    if h.ambient_dim() != n {
        return Err(AlgebraError::DimensionMismatch { got: h.ambient_dim(), want: n }.into());
    }
    // H must be abelian for both products
    for (i, u) in h.basis().iter().enumerate() {
        for (j, v) in h.basis().iter().enumerate().skip(i) {
            let br = a.bracket(u, v)?;
            if !br.is_zero() {
                return Err(SplitError::NotAbelian {
                    witness: format!("[h_{i}, h_{j}] = {br:?} != 0"),
                });
            }
            let jo = a.jordan_prod(u, v)?;
            if !jo.is_zero() {
                return Err(SplitError::NotAbelian {
                    witness: format!("h_{i} h_{j} = {jo:?} != 0"),
                });
            }
        }
    }
    // successive refinement by each ad(h_i)
    let mut pieces: Vec<(Vec<Rat>, Subspace)> = vec![(Vec::new(), Subspace::full(n))];
    for (i, hi) in h.basis().iter().enumerate() {
        let ad = a.ad_matrix(hi)?;
        let mut refined = Vec::new();
        for (label, w) in pieces {
            // restriction of ad(h_i) to w, in the RREF basis of w
            let m = w.dim();
            let mut restricted = QMatrix::zero(m, m);
            for (col, b) in w.basis().iter().enumerate() {
                let image = ad.apply(b);
                let coords = image.coords_in(&w).ok_or_else(|| SplitError::NotSplit {
                    detail: format!(
                        "ad(h_{i}) does not preserve a refinement piece of dimension {m}"
                    ),
                })?;
                for (row, c) in coords.into_iter().enumerate() {
                    restricted.set(row, col, c);
                }
            }
            let eigen = rational_eigen(&restricted);
            let total: usize = eigen.iter().map(|(_, e)| e.dim()).sum();
            if total != m {
                return Err(SplitError::NotSplit {
                    detail: format!(
                        "ad(h_{i}) restricted to a {m}-dimensional piece has rational eigenspaces of total dimension {total}"
                    ),
                });
            }
            for (lambda, espace) in eigen {
                // lift eigenvectors from w-coordinates back to the ambient space
                let lifted: Vec<QVec> =
                    espace.basis().iter().map(|c| w.from_coordinates(&c.coords)).collect();
                let mut label2 = label.clone();
                label2.push(lambda);
                refined.push((label2, Subspace::span(&lifted, n)));
            }
        }
        pieces = refined;
    }
    let mut zero_space = Subspace::zero(n);
    let mut spaces = BTreeMap::new();
    for (label, w) in pieces {
        let root = Root::new(label);
        if root.is_zero() {
            zero_space = w;
        } else {
            spaces.insert(root, w);
        }
    }
    if &zero_space != h {
        return Err(SplitError::NotMasa { zero_dim: zero_space.dim(), h_dim: h.dim() });
    }
    let roots: Vec<Root> = spaces.keys().cloned().collect();
    Ok(RootDecomposition { algebra: a.clone(), h: h.clone(), roots, spaces, zero_space })
}

// coordinates_of lives on Subspace; give QVec the transposed convenience
// used above.
trait CoordsIn {
    fn coords_in(&self, s: &Subspace) -> Option<Vec<Rat>>;
}

impl CoordsIn for QVec {
    fn coords_in(&self, s: &Subspace) -> Option<Vec<Rat>> {
        s.coordinates_of(self)
    }
}

/// Independent re-check of a constructed decomposition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SplitReport {
    /// dim H + Σ dim P_α = n and the sum of all pieces is the whole space
    /// (with matching dimension, hence direct).
    pub direct_and_spanning: bool,
    /// zero_space equals H.
    pub h_equals_p0: bool,
    /// [h, v] = α(h) v holds exactly for every H-basis h and P_α-basis v.
    pub eigen_action: bool,
    /// α ∈ Λ ⇒ −α ∈ Λ. A flag, not an error: the structure theorems
    /// downstream require it, the decomposition itself does not.
    pub symmetric: bool,
}

impl SplitReport {
    pub fn all_structural(&self) -> bool {
        self.direct_and_spanning && self.h_equals_p0 && self.eigen_action
    }
}

pub fn verify_split(rd: &RootDecomposition) -> SplitReport {
    let n = rd.algebra.dim();
    let mut total = rd.h.dim();
    let mut sum = rd.h.clone();
    for s in rd.spaces.values() {
        total += s.dim();
        sum = sum.sum(s);
    }
    let direct_and_spanning = total == n && sum == Subspace::full(n);
    let h_equals_p0 = rd.zero_space == rd.h;
    let mut eigen_action = true;
    'outer: for (alpha, space) in &rd.spaces {
        for (i, hi) in rd.h.basis().iter().enumerate() {
            for v in space.basis() {
                let lhs = rd.algebra.bracket(hi, v).expect("dimensions agree by construction");
                if lhs != v.scale(&alpha.values()[i]) {
                    eigen_action = false;
                    break 'outer;
                }
            }
        }
    }
    SplitReport {
        direct_and_spanning,
        h_equals_p0,
        eigen_action,
        symmetric: rd.is_symmetric(),
    }
}

/// One verified containment of the root-space product lemma.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Containment {
    pub description: String,
    pub passed: bool,
    /// A product vector escaping the target space, when failed.
    pub witness: Option<QVec>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootProductsReport {
    pub checks: Vec<Containment>,
}

impl RootProductsReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Containment> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

/// Verifies, for every ordered pair of functionals in Λ ∪ {0}:
/// [P_α, P_β] ⊆ P_{α+β} for α ≠ β, [P_α, P_α] ⊆ P_{2α} + P_{−α} for
/// α ≠ 0, and P_α P_β ⊆ P_{α+β} always — where P_γ = 0 for γ outside
/// Λ ∪ {0}. Together these also certify that a nonzero product forces
/// α + β ∈ Λ ∪ {0}.
pub fn verify_rootspace_products(rd: &RootDecomposition) -> RootProductsReport {
    let a = &rd.algebra;
    let mut labels: Vec<Root> = vec![Root::new(vec![Rat::zero(); rd.h.dim()])];
    labels.extend(rd.roots.iter().cloned());
    let mut checks = Vec::new();
    for alpha in &labels {
        for beta in &labels {
            let pa = rd.space_of(alpha);
            let pb = rd.space_of(beta);
            let bracket_target = if alpha == beta && !alpha.is_zero() {
                (rd.space_of(&alpha.double()).sum(&rd.space_of(&alpha.neg())),
                 format!("[P_{alpha:?}, P_{alpha:?}] in P_{:?} + P_{:?}", alpha.double(), alpha.neg()))
            } else {
                (rd.space_of(&alpha.add(beta)),
                 format!("[P_{alpha:?}, P_{beta:?}] in P_{:?}", alpha.add(beta)))
            };
            checks.push(containment_check(
                bracket_target.1,
                &pa,
                &pb,
                &bracket_target.0,
                |u, v| a.bracket(u, v).expect("dimensions agree by construction"),
            ));
            let jordan_target = rd.space_of(&alpha.add(beta));
            checks.push(containment_check(
                format!("P_{alpha:?} P_{beta:?} in P_{:?}", alpha.add(beta)),
                &pa,
                &pb,
                &jordan_target,
                |u, v| a.jordan_prod(u, v).expect("dimensions agree by construction"),
            ));
        }
    }
    RootProductsReport { checks }
}

fn containment_check(
    description: String,
    left: &Subspace,
    right: &Subspace,
    target: &Subspace,
    product: impl Fn(&QVec, &QVec) -> QVec,
) -> Containment {
    for u in left.basis() {
        for v in right.basis() {
            let p = product(u, v);
            if !p.is_zero() && !target.contains(&p) {
                return Containment { description, passed: false, witness: Some(p) };
            }
        }
    }
    Containment { description, passed: true, witness: None }
}
