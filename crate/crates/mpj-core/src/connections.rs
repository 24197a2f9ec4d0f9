//! Connections between roots: the Ω set, the ⋆ map with its θ symbols,
//! reachability closure, and the partition of Λ into connection classes.

use crate::exactlin::{QVec, Subspace};
use crate::split::{Root, RootDecomposition};
use crate::rational::Rat;
use num::Zero;
use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// A value of the ⋆ map: a functional on H (not necessarily in ±Λ), a
/// θ symbol attached to a root of Ω, or zero.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum StarElement {
    RootValue { root: Root, in_pm_lambda: bool },
    Theta(Root),
    Zero,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StarError {
    #[error("left argument of ⋆ must lie in ±Λ ∪ Θ_Ω, got {0:?}")]
    LeftOutOfDomain(StarElement),
    #[error("right argument of ⋆ must lie in ±Λ, got {0:?}")]
    RightOutOfDomain(Root),
    #[error("root {0:?} is not in Λ")]
    NotARoot(Root),
    #[error("connection classes do not form an equivalence: {alpha:?} reaches {beta:?} but not conversely")]
    EquivalenceViolation { alpha: Root, beta: Root },
}

/// Read-only context for connection computations over one decomposition.
pub struct ConnectionContext {
    rd: RootDecomposition,
    omega: BTreeSet<Root>,
    pm_lambda: BTreeSet<Root>,
    star_cache: RefCell<BTreeMap<(StarElement, Root), StarElement>>,
}

impl ConnectionContext {
    pub fn new(rd: RootDecomposition) -> Self {
        let omega = compute_omega(&rd);
        let mut pm_lambda = BTreeSet::new();
        for r in rd.roots() {
            pm_lambda.insert(r.clone());
            pm_lambda.insert(r.neg());
        }
        ConnectionContext { rd, omega, pm_lambda, star_cache: RefCell::new(BTreeMap::new()) }
    }

    pub fn rd(&self) -> &RootDecomposition {
        &self.rd
    }

    pub fn omega(&self) -> &BTreeSet<Root> {
        &self.omega
    }

    pub fn pm_lambda(&self) -> &BTreeSet<Root> {
        &self.pm_lambda
    }

    pub fn in_pm_lambda(&self, gamma: &Root) -> bool {
        self.pm_lambda.contains(gamma)
    }

    /// Wraps a root of ±Λ as a ⋆ operand.
    pub fn root_value(&self, alpha: &Root) -> StarElement {
        StarElement::RootValue { root: alpha.clone(), in_pm_lambda: self.in_pm_lambda(alpha) }
    }

    /// The ⋆ map on (±Λ ∪ Θ_Ω) × ±Λ. Branch 1: α ⋆ (−α) is θ_α when
    /// α ∈ Ω, zero otherwise. Branch 2: α ⋆ β for β ≠ −α is the functional
    /// sum α + β (which may leave ±Λ and become a dead end). Branch 3:
    /// θ_α ⋆ β is β when one of four products tying P_α, P_{−α} and P_β
    /// together is nonzero, zero otherwise.
    pub fn star(&self, a: &StarElement, b: &Root) -> Result<StarElement, StarError> {
        if !self.in_pm_lambda(b) {
            return Err(StarError::RightOutOfDomain(b.clone()));
        }
        match a {
            StarElement::Zero => Err(StarError::LeftOutOfDomain(a.clone())),
            StarElement::RootValue { in_pm_lambda: false, .. } => {
                Err(StarError::LeftOutOfDomain(a.clone()))
            }
            StarElement::Theta(alpha) if !self.omega.contains(alpha) => {
                Err(StarError::LeftOutOfDomain(a.clone()))
            }
            _ => {
                let key = (a.clone(), b.clone());
                if let Some(hit) = self.star_cache.borrow().get(&key) {
                    return Ok(hit.clone());
                }
                let out = self.star_uncached(a, b);
                self.star_cache.borrow_mut().insert(key, out.clone());
                Ok(out)
            }
        }
    }

    fn star_uncached(&self, a: &StarElement, b: &Root) -> StarElement {
        match a {
            StarElement::RootValue { root: alpha, .. } => {
                if *b == alpha.neg() {
                    if self.omega.contains(alpha) {
                        StarElement::Theta(alpha.clone())
                    } else {
                        StarElement::Zero
                    }
                } else {
                    let sum = alpha.add(b);
                    let flag = self.in_pm_lambda(&sum);
                    StarElement::RootValue { root: sum, in_pm_lambda: flag }
                }
            }
            StarElement::Theta(alpha) => {
                if self.theta_star_conditions(alpha, b).iter().any(|&c| c) {
                    self.root_value(b)
                } else {
                    StarElement::Zero
                }
            }
            StarElement::Zero => unreachable!("rejected by the domain check"),
        }
    }

    /// The four product conditions of θ_α ⋆ β, in order:
    /// [[P_α,P_{−α}], P_β], (P_α P_{−α}) P_β, [P_α P_{−α}, P_β],
    /// [P_α, P_{−α}] P_β — each "fired" when nonzero.
    pub fn theta_star_conditions(&self, alpha: &Root, beta: &Root) -> [bool; 4] {
        let a = self.rd.algebra();
        let pa = self.rd.space_of(alpha);
        let pna = self.rd.space_of(&alpha.neg());
        let pb = self.rd.space_of(beta);
        let br = |u: &QVec, v: &QVec| a.bracket(u, v).expect("dimensions agree");
        let jo = |u: &QVec, v: &QVec| a.jordan_prod(u, v).expect("dimensions agree");
        let bracket_aa = product_space(&pa, &pna, br);
        let jordan_aa = product_space(&pa, &pna, jo);
        [
            products_nonzero(&bracket_aa, &pb, br),
            products_nonzero(&jordan_aa, &pb, jo),
            products_nonzero(&jordan_aa, &pb, br),
            products_nonzero(&bracket_aa, &pb, jo),
        ]
    }

    /// Connection class of α: the set of β ∈ Λ reachable from α, computed
    /// as a breadth-first fixpoint over the finite state space
    /// ±Λ ∪ Θ_Ω. RootValues outside ±Λ and Zero are dead ends and never
    /// expanded; a class member is any β ∈ Λ with β or −β reached.
    pub fn connection_class(&self, alpha: &Root) -> Result<BTreeSet<Root>, StarError> {
        if !self.rd.is_root(alpha) {
            return Err(StarError::NotARoot(alpha.clone()));
        }
        let mut reached: BTreeSet<StarElement> = BTreeSet::new();
        reached.insert(self.root_value(alpha));
        let mut frontier: Vec<StarElement> = reached.iter().cloned().collect();
        while let Some(r) = frontier.pop() {
            for gamma in &self.pm_lambda {
                let s = self.star(&r, gamma)?;
                let expandable = matches!(
                    &s,
                    StarElement::RootValue { in_pm_lambda: true, .. } | StarElement::Theta(_)
                );
                if expandable && reached.insert(s.clone()) {
                    frontier.push(s);
                }
            }
        }
        let mut class = BTreeSet::new();
        for beta in self.rd.roots() {
            let direct = self.root_value(beta);
            let negated = self.root_value(&beta.neg());
            if reached.contains(&direct) || reached.contains(&negated) {
                class.insert(beta.clone());
            }
        }
        Ok(class)
    }

    /// All connection classes, sorted by lexicographically-least member,
    /// after machine-checking that "connected" is an equivalence on Λ
    /// (reflexive, and β ∈ class(α) ⇔ class(β) = class(α)).
    pub fn partition(&self) -> Result<Vec<BTreeSet<Root>>, StarError> {
        let mut class_of: BTreeMap<Root, BTreeSet<Root>> = BTreeMap::new();
        for alpha in self.rd.roots() {
            let class = self.connection_class(alpha)?;
            if !class.contains(alpha) {
                return Err(StarError::EquivalenceViolation {
                    alpha: alpha.clone(),
                    beta: alpha.clone(),
                });
            }
            class_of.insert(alpha.clone(), class);
        }
        for (alpha, class) in &class_of {
            for beta in class {
                if class_of[beta] != *class {
                    return Err(StarError::EquivalenceViolation {
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                    });
                }
            }
        }
        let mut classes: Vec<BTreeSet<Root>> = Vec::new();
        for class in class_of.values() {
            if !classes.contains(class) {
                classes.push(class.clone());
            }
        }
        // BTreeSet iteration is sorted, so ordering by first member is
        // ordering by least member
        classes.sort_by(|a, b| a.iter().next().cmp(&b.iter().next()));
        Ok(classes)
    }
}

/// Ω = {α ∈ Λ : [P_α,P_{−α}] ≠ 0, or [[P_β,P_{−β}],P_α] ≠ 0 for some
/// β ∈ Λ, or P_α P_{−α} ≠ 0}. Conditions touching P_{−γ} are vacuously
/// false when −γ ∉ Λ.
pub fn compute_omega(rd: &RootDecomposition) -> BTreeSet<Root> {
    let a = rd.algebra();
    let br = |u: &QVec, v: &QVec| a.bracket(u, v).expect("dimensions agree");
    let jo = |u: &QVec, v: &QVec| a.jordan_prod(u, v).expect("dimensions agree");
    let mut omega = BTreeSet::new();
    for alpha in rd.roots() {
        let pa = rd.space_of(alpha);
        let pna = rd.space_of(&alpha.neg());
        let mut member = products_nonzero(&pa, &pna, br) || products_nonzero(&pa, &pna, jo);
        if !member {
            for beta in rd.roots() {
                let pb = rd.space_of(beta);
                let pnb = rd.space_of(&beta.neg());
                let inner = product_space(&pb, &pnb, br);
                if products_nonzero(&inner, &pa, br) {
                    member = true;
                    break;
                }
            }
        }
        if member {
            omega.insert(alpha.clone());
        }
    }
    omega
}

/// Span of all pairwise products of the two bases.
pub fn product_space(
    s: &Subspace,
    t: &Subspace,
    product: impl Fn(&QVec, &QVec) -> QVec,
) -> Subspace {
    let n = s.ambient_dim();
    let mut rows = Vec::new();
    for u in s.basis() {
        for v in t.basis() {
            rows.push(product(u, v));
        }
    }
    Subspace::span(&rows, n)
}

fn products_nonzero(
    s: &Subspace,
    t: &Subspace,
    product: impl Fn(&QVec, &QVec) -> QVec,
) -> bool {
    s.basis().iter().any(|u| t.basis().iter().any(|v| !product(u, v).is_zero()))
}

/// The zero functional on an H of the given dimension.
pub fn zero_root(h_dim: usize) -> Root {
    Root::new(vec![Rat::zero(); h_dim])
}
