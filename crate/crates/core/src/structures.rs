//! Algebras, coalgebras, pairings and module actions on a carrier object,
//! with exact checkers for every defining axiom.
//!
//! Constructors validate shapes only; whether the structure constants
//! actually satisfy the axioms is decided by the `check_*` functions, which
//! report the exact difference matrix of every failed identity. This split
//! is deliberate: the checkers must be able to hold corrupted structures in
//! order to produce witnesses for them. The one exception is
//! [`ModuleAction`], whose axioms are re-checked at construction because
//! everything downstream silently assumes them.

use crate::error::Error;
use crate::exact::{Inverse, Matrix, Scalar};
use crate::finvect::{coev_left, coev_right, ev_left, ev_right, Mor, Obj};

/// Result of one exact identity check. `difference` is `lhs − rhs`,
/// kept only when the check fails.
#[derive(Clone, Debug)]
pub struct AxiomCheck {
    pub axiom: String,
    pub passed: bool,
    pub difference: Option<Matrix>,
}

/// Outcome of a structure check: one [`AxiomCheck`] per defining identity.
#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    checks: Vec<AxiomCheck>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport { checks: Vec::new() }
    }

    pub fn record(&mut self, axiom: &str, lhs: &Mor, rhs: &Mor) {
        let difference = lhs
            .matrix()
            .sub(rhs.matrix())
            .expect("axiom sides have equal shape");
        let passed = difference.is_zero();
        self.checks.push(AxiomCheck {
            axiom: axiom.to_owned(),
            passed,
            difference: (!passed).then_some(difference),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn checks(&self) -> &[AxiomCheck] {
        &self.checks
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn failure_summary(&self) -> String {
        self.failures()
            .map(|c| c.axiom.as_str())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// A unital associative algebra candidate `(A, m, η)`.
///
/// `m : A ⊗ A → A`, `η : 1 → A`. Shapes are enforced here; associativity
/// and unitality are what [`check_algebra`] decides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    carrier: Obj,
    m: Mor,
    eta: Mor,
}

impl Algebra {
    pub fn new(carrier: Obj, m: Mor, eta: Mor) -> Result<Self, Error> {
        expect_shape(&m, &[carrier.clone(), carrier.clone()], &[carrier.clone()])?;
        expect_shape(&eta, &[], &[carrier.clone()])?;
        Ok(Algebra { carrier, m, eta })
    }

    pub fn carrier(&self) -> &Obj {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn m(&self) -> &Mor {
        &self.m
    }

    pub fn eta(&self) -> &Mor {
        &self.eta
    }

    pub fn id(&self) -> Mor {
        Mor::identity(&[self.carrier.clone()])
    }
}

/// A coassociative counital coalgebra candidate `(C, Δ, ε)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    carrier: Obj,
    delta: Mor,
    eps: Mor,
}

impl Coalgebra {
    pub fn new(carrier: Obj, delta: Mor, eps: Mor) -> Result<Self, Error> {
        expect_shape(&delta, &[carrier.clone()], &[carrier.clone(), carrier.clone()])?;
        expect_shape(&eps, &[carrier.clone()], &[])?;
        Ok(Coalgebra { carrier, delta, eps })
    }

    pub fn carrier(&self) -> &Obj {
        &self.carrier
    }

    pub fn delta(&self) -> &Mor {
        &self.delta
    }

    pub fn eps(&self) -> &Mor {
        &self.eps
    }
}

/// A pairing `κ : A ⊗ A → 1` together with its two induced maps into the
/// duals,
///
/// ```text
/// Φ_l = (id ⊗ κ) ∘ (b̃_A ⊗ id) : A → A*      (κ against the first slot)
/// Φ_r = (κ ⊗ id) ∘ (id ⊗ b_A) : A → A*      (κ against the second slot)
/// ```
///
/// Both are cached at construction. The binding contract relating them to
/// κ is `d_A ∘ (Φ_r ⊗ id) = κ = d̃_A ∘ (id ⊗ Φ_l)`, which holds for any κ
/// by the zig-zag identities and is asserted here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    carrier: Obj,
    kappa: Mor,
    phi_l: Mor,
    phi_r: Mor,
}

impl Pairing {
    pub fn new(carrier: Obj, kappa: Mor) -> Result<Self, Error> {
        expect_shape(&kappa, &[carrier.clone(), carrier.clone()], &[])?;
        let id_a = Mor::identity(&[carrier.clone()]);
        let id_ad = Mor::identity(&[carrier.dual()]);

        let phi_l = id_ad
            .tensor(&kappa)
            .compose(&coev_left(&carrier).tensor(&id_a))?;
        let phi_r = kappa
            .tensor(&id_ad)
            .compose(&id_a.tensor(&coev_right(&carrier)))?;

        let via_r = ev_right(&carrier).compose(&phi_r.tensor(&id_a))?;
        let via_l = ev_left(&carrier).compose(&id_a.tensor(&phi_l))?;
        assert_eq!(via_r, kappa, "d_A ∘ (Φ_r ⊗ id) = κ must hold by construction");
        assert_eq!(via_l, kappa, "d̃_A ∘ (id ⊗ Φ_l) = κ must hold by construction");

        Ok(Pairing {
            carrier,
            kappa,
            phi_l,
            phi_r,
        })
    }

    /// Builds the pairing from its Gram matrix `K[i][j] = κ(e_i, e_j)`.
    pub fn from_gram(carrier: Obj, gram: &Matrix) -> Result<Self, Error> {
        let n = carrier.dim();
        if gram.rows() != n || gram.cols() != n {
            return Err(Error::MorShape {
                rows: gram.rows(),
                cols: gram.cols(),
                want_rows: n,
                want_cols: n,
            });
        }
        let mut row = Matrix::zeros(1, n * n);
        for i in 0..n {
            for j in 0..n {
                row.set(0, i * n + j, gram.at(i, j).clone());
            }
        }
        let kappa = Mor::new(vec![carrier.clone(), carrier.clone()], vec![], row)?;
        Pairing::new(carrier, kappa)
    }

    pub fn carrier(&self) -> &Obj {
        &self.carrier
    }

    pub fn kappa(&self) -> &Mor {
        &self.kappa
    }

    pub fn phi_l(&self) -> &Mor {
        &self.phi_l
    }

    pub fn phi_r(&self) -> &Mor {
        &self.phi_r
    }

    /// The Gram matrix `K[i][j] = κ(e_i, e_j)`.
    pub fn gram(&self) -> Matrix {
        let n = self.carrier.dim();
        Matrix::from_fn(n, n, |i, j| self.kappa.matrix().at(0, i * n + j).clone())
    }

    /// Evaluates κ on a pair of coordinate vectors.
    pub fn eval(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        let n = self.carrier.dim();
        assert!(a.len() == n && b.len() == n);
        let mut acc = Scalar::zero();
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[j].is_zero() {
                    continue;
                }
                acc += &(&a[i] * &b[j]) * self.kappa.matrix().at(0, i * n + j);
            }
        }
        acc
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A module action of an algebra on a carrier object. The module axioms
/// are verified at construction and an [`Error::ModuleAxiom`] is returned
/// when they fail.
#[derive(Clone, Debug)]
pub struct ModuleAction {
    algebra: Algebra,
    carrier: Obj,
    action: Mor,
    side: Side,
}

impl ModuleAction {
    pub fn new(algebra: Algebra, carrier: Obj, action: Mor, side: Side) -> Result<Self, Error> {
        let a = algebra.carrier().clone();
        match side {
            Side::Left => expect_shape(&action, &[a.clone(), carrier.clone()], &[carrier.clone()])?,
            Side::Right => expect_shape(&action, &[carrier.clone(), a.clone()], &[carrier.clone()])?,
        }
        let id_m = Mor::identity(&[carrier.clone()]);
        let id_a = Mor::identity(&[a]);
        let (assoc_l, assoc_r, unit) = match side {
            Side::Left => (
                action.compose(&algebra.m().tensor(&id_m))?,
                action.compose(&id_a.tensor(&action))?,
                action.compose(&algebra.eta().tensor(&id_m))?,
            ),
            Side::Right => (
                action.compose(&id_m.tensor(algebra.m()))?,
                action.compose(&action.tensor(&id_a))?,
                action.compose(&id_m.tensor(algebra.eta()))?,
            ),
        };
        if assoc_l != assoc_r {
            return Err(Error::ModuleAxiom(format!(
                "{side:?} action on {carrier:?} is not associative"
            )));
        }
        if unit != id_m {
            return Err(Error::ModuleAxiom(format!(
                "{side:?} action on {carrier:?} does not respect the unit"
            )));
        }
        Ok(ModuleAction {
            algebra,
            carrier,
            action,
            side,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn carrier(&self) -> &Obj {
        &self.carrier
    }

    pub fn action(&self) -> &Mor {
        &self.action
    }

    pub fn side(&self) -> Side {
        self.side
    }
}

fn expect_shape(mor: &Mor, dom: &[Obj], cod: &[Obj]) -> Result<(), Error> {
    let dom: Vec<Obj> = dom.iter().filter(|o| !o.is_unit()).cloned().collect();
    let cod: Vec<Obj> = cod.iter().filter(|o| !o.is_unit()).cloned().collect();
    if mor.dom() != dom.as_slice() || mor.cod() != cod.as_slice() {
        return Err(Error::DomainMismatch {
            expected: format!("{dom:?} → {cod:?}"),
            got: format!("{} → {}", mor.dom_label(), mor.cod_label()),
        });
    }
    Ok(())
}

/// Checks associativity `m ∘ (m ⊗ id) = m ∘ (id ⊗ m)` and both unit laws.
pub fn check_algebra(a: &Algebra) -> CheckReport {
    let id = a.id();
    let mut report = CheckReport::new();
    let left = a.m().compose(&a.m().tensor(&id)).expect("shape");
    let right = a.m().compose(&id.tensor(a.m())).expect("shape");
    report.record("associativity", &left, &right);
    let unit_l = a.m().compose(&a.eta().tensor(&id)).expect("shape");
    report.record("left unit", &unit_l, &id);
    let unit_r = a.m().compose(&id.tensor(a.eta())).expect("shape");
    report.record("right unit", &unit_r, &id);
    report
}

/// Checks coassociativity `(Δ ⊗ id) ∘ Δ = (id ⊗ Δ) ∘ Δ` and both counit
/// laws.
pub fn check_coalgebra(c: &Coalgebra) -> CheckReport {
    let id = Mor::identity(&[c.carrier().clone()]);
    let mut report = CheckReport::new();
    let left = c.delta().tensor(&id).compose(c.delta()).expect("shape");
    let right = id.tensor(c.delta()).compose(c.delta()).expect("shape");
    report.record("coassociativity", &left, &right);
    let counit_l = c.eps().tensor(&id).compose(c.delta()).expect("shape");
    report.record("left counit", &counit_l, &id);
    let counit_r = id.tensor(c.eps()).compose(c.delta()).expect("shape");
    report.record("right counit", &counit_r, &id);
    report
}

/// Checks that the coproduct is a morphism of bimodules over the algebra:
///
/// ```text
/// Δ ∘ m = (id ⊗ m) ∘ (Δ ⊗ id) = (m ⊗ id) ∘ (id ⊗ Δ)
/// ```
pub fn check_frobenius_compat(a: &Algebra, c: &Coalgebra) -> Result<CheckReport, Error> {
    same_carrier(a.carrier(), c.carrier())?;
    let id = a.id();
    let mut report = CheckReport::new();
    let dm = c.delta().compose(a.m()).expect("shape");
    let left = id.tensor(a.m()).compose(&c.delta().tensor(&id)).expect("shape");
    report.record("coproduct is a left module morphism", &dm, &left);
    let right = a.m().tensor(&id).compose(&id.tensor(c.delta())).expect("shape");
    report.record("coproduct is a right module morphism", &dm, &right);
    Ok(report)
}

/// Invariance of a pairing: `κ ∘ (m ⊗ id) = κ ∘ (id ⊗ m)`.
pub fn check_invariance(a: &Algebra, k: &Pairing) -> Result<bool, Error> {
    same_carrier(a.carrier(), k.carrier())?;
    let id = a.id();
    let left = k.kappa().compose(&a.m().tensor(&id))?;
    let right = k.kappa().compose(&id.tensor(a.m()))?;
    Ok(left == right)
}

/// Witness produced by [`check_nondegenerate`]: the exact inverse of `Φ_l`
/// when it exists, a kernel vector otherwise.
#[derive(Clone, Debug)]
pub enum NondegWitness {
    Inverse(Matrix),
    NullVector(Vec<Scalar>),
}

#[derive(Clone, Debug)]
pub struct NondegeneracyReport {
    pub nondegenerate: bool,
    pub rank: usize,
    pub witness: NondegWitness,
}

/// Decides whether `Φ_l` is invertible. The invertibility of `Φ_r` is
/// equivalent and is asserted along the way.
pub fn check_nondegenerate(k: &Pairing) -> NondegeneracyReport {
    let n = k.carrier().dim();
    let phi_l = k.phi_l().matrix();
    let report = match phi_l.solve_or_invert().expect("phi_l is square") {
        Inverse::Invertible(inv) => NondegeneracyReport {
            nondegenerate: true,
            rank: n,
            witness: NondegWitness::Inverse(inv),
        },
        Inverse::Singular(s) => NondegeneracyReport {
            nondegenerate: false,
            rank: s.rank,
            witness: NondegWitness::NullVector(
                s.null_basis.into_iter().next().unwrap_or_default(),
            ),
        },
    };
    let rank_r = k.phi_r().matrix().rank();
    assert_eq!(
        rank_r == n,
        report.nondegenerate,
        "invertibility of Φ_r must match invertibility of Φ_l"
    );
    report
}

/// The natural left action of `A` on its dual and right action on the
/// dual from the other side:
///
/// ```text
/// ρ  = (id ⊗ d̃_A) ∘ (id ⊗ m ⊗ id) ∘ (b̃_A ⊗ id ⊗ id) : A ⊗ A* → A*
/// ρ̄  = (d_A ⊗ id) ∘ (id ⊗ m ⊗ id) ∘ (id ⊗ id ⊗ b_A) : A* ⊗ A → A*
/// ```
///
/// Both are returned as verified [`ModuleAction`]s.
pub fn dual_actions(a: &Algebra) -> Result<(ModuleAction, ModuleAction), Error> {
    let carrier = a.carrier().clone();
    let dual = carrier.dual();
    let id_a = a.id();
    let id_ad = Mor::identity(&[dual.clone()]);

    let start = coev_left(&carrier).tensor(&id_a).tensor(&id_ad);
    let mid = id_ad.tensor(a.m()).tensor(&id_ad).compose(&start)?;
    let rho = id_ad.tensor(&ev_left(&carrier)).compose(&mid)?;

    let start = id_ad.tensor(&id_a).tensor(&coev_right(&carrier));
    let mid = id_ad.tensor(a.m()).tensor(&id_ad).compose(&start)?;
    let rho_bar = ev_right(&carrier).tensor(&id_ad).compose(&mid)?;

    let left = ModuleAction::new(a.clone(), dual.clone(), rho, Side::Left)?;
    let right = ModuleAction::new(a.clone(), dual, rho_bar, Side::Right)?;
    Ok((left, right))
}

/// Whether `f` intertwines two module actions on the same side:
/// `f ∘ ρ_M = ρ_N ∘ (id_A ⊗ f)` for left modules, mirrored for right ones.
pub fn check_module_morphism(f: &Mor, m: &ModuleAction, n: &ModuleAction) -> Result<bool, Error> {
    if m.side() != n.side() {
        return Err(Error::DomainMismatch {
            expected: format!("{:?} module", m.side()),
            got: format!("{:?} module", n.side()),
        });
    }
    same_carrier(m.algebra().carrier(), n.algebra().carrier())?;
    expect_shape(f, &[m.carrier().clone()], &[n.carrier().clone()])?;
    let id_a = m.algebra().id();
    let lhs = f.compose(m.action())?;
    let rhs = match m.side() {
        Side::Left => n.action().compose(&id_a.tensor(f))?,
        Side::Right => n.action().compose(&f.tensor(&id_a))?,
    };
    Ok(lhs == rhs)
}

pub(crate) fn same_carrier(left: &Obj, right: &Obj) -> Result<(), Error> {
    if left != right {
        return Err(Error::CarrierMismatch {
            left: format!("{left:?}"),
            right: format!("{right:?}"),
        });
    }
    Ok(())
}
