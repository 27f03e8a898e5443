//! Conversions among the three presentations of a Frobenius structure on
//! an algebra, and the three equivalent symmetry checks.
//!
//! The presentations are:
//!
//! * a compatible coalgebra `(Δ, ε)` whose coproduct is a bimodule
//!   morphism,
//! * an invariant non-degenerate pairing `κ : A ⊗ A → 1`,
//! * a left-module isomorphism `Φ : A → A*` onto the dual module.
//!
//! The conversion formulas are
//!
//! ```text
//! κ_ε = ε ∘ m
//! Δ_κ = (id ⊗ m) ∘ (id ⊗ Φ_r⁻¹ ⊗ id) ∘ (b_A ⊗ id),   ε_κ = κ ∘ (id ⊗ η)
//! κ_φ = d̃_A ∘ (id ⊗ φ)
//! ```
//!
//! and each round trip restores its input exactly. `Φ_r⁻¹` is computed by
//! exact matrix inversion; the coproduct-based expression for the inverse
//! serves as a cross-check in the tests, not as the primary path.

use crate::error::Error;
use crate::exact::Matrix;
use crate::finvect::{coev_left, coev_right, ev_left, ev_right, wee, Mor};
use crate::structures::{
    check_algebra, check_coalgebra, check_frobenius_compat, check_invariance,
    check_nondegenerate, same_carrier, Algebra, Coalgebra, Pairing,
};

/// Transports a pairing through the dualities so that its arguments are
/// exchanged:
///
/// ```text
/// d_A ∘ (id ⊗ κ ⊗ id) ∘ (b̃_A ⊗ id ⊗ id) : A ⊗ A → 1
/// ```
///
/// On Gram matrices this is transposition. A pairing is symmetric exactly
/// when this equals κ itself, and the Nakayama morphism is defined against
/// it.
pub fn exchanged_pairing(k: &Pairing) -> Mor {
    let a = k.carrier();
    let id_a = Mor::identity(&[a.clone()]);
    let id_ad = Mor::identity(&[a.dual()]);
    let start = coev_left(a).tensor(&id_a).tensor(&id_a);
    let mid = id_ad
        .tensor(k.kappa())
        .tensor(&id_a)
        .compose(&start)
        .expect("shape");
    ev_right(a).compose(&mid).expect("shape")
}

/// The same exchange built from the other duality pair,
/// `d̃_A ∘ (id ⊗ κ ⊗ id) ∘ (id ⊗ id ⊗ b_A)`; kept as a redundant second
/// route and asserted to agree with [`exchanged_pairing`].
fn exchanged_pairing_alt(k: &Pairing) -> Mor {
    let a = k.carrier();
    let id_a = Mor::identity(&[a.clone()]);
    let id_ad = Mor::identity(&[a.dual()]);
    let start = id_a.tensor(&id_a).tensor(&coev_right(a));
    let mid = id_a
        .tensor(k.kappa())
        .tensor(&id_ad)
        .compose(&start)
        .expect("shape");
    ev_left(a).compose(&mid).expect("shape")
}

/// Validates that `(A, m, η, Δ, ε)` is a Frobenius pair: algebra and
/// coalgebra axioms hold and the coproduct is a bimodule morphism.
pub fn validate_counit_structure(a: &Algebra, c: &Coalgebra) -> Result<(), Error> {
    let alg = check_algebra(a);
    if !alg.passed() {
        return Err(Error::AxiomFailure(format!(
            "algebra axioms: {}",
            alg.failure_summary()
        )));
    }
    let coalg = check_coalgebra(c);
    if !coalg.passed() {
        return Err(Error::AxiomFailure(format!(
            "coalgebra axioms: {}",
            coalg.failure_summary()
        )));
    }
    let compat = check_frobenius_compat(a, c)?;
    if !compat.passed() {
        return Err(Error::AxiomFailure(format!(
            "bimodule compatibility: {}",
            compat.failure_summary()
        )));
    }
    Ok(())
}

/// Validates that a pairing is invariant and non-degenerate, returning the
/// exact inverse of its `Φ_l`.
pub fn validate_pairing(a: &Algebra, k: &Pairing) -> Result<Matrix, Error> {
    same_carrier(a.carrier(), k.carrier())?;
    if !check_invariance(a, k)? {
        return Err(Error::NonInvariantPairing);
    }
    let report = check_nondegenerate(k);
    match report.witness {
        crate::structures::NondegWitness::Inverse(inv) => Ok(inv),
        crate::structures::NondegWitness::NullVector(_) => Err(Error::DegeneratePairing {
            rank: report.rank,
            dim: k.carrier().dim(),
        }),
    }
}

/// `κ_ε := ε ∘ m`. Requires a valid Frobenius pair; the result is then
/// invariant and non-degenerate.
pub fn kappa_from_counit(a: &Algebra, c: &Coalgebra) -> Result<Pairing, Error> {
    validate_counit_structure(a, c)?;
    let kappa = c.eps().compose(a.m())?;
    let pairing = Pairing::new(a.carrier().clone(), kappa)?;
    assert!(
        check_invariance(a, &pairing)?,
        "ε ∘ m is invariant by associativity"
    );
    assert!(
        check_nondegenerate(&pairing).nondegenerate,
        "ε ∘ m is non-degenerate for a Frobenius pair"
    );
    Ok(pairing)
}

/// The three equivalent composites for the coproduct induced by an
/// invariant non-degenerate pairing:
///
/// ```text
/// (id ⊗ m) ∘ (id ⊗ Φ_r⁻¹ ⊗ id) ∘ (b_A ⊗ id)
/// (m ⊗ id) ∘ (id ⊗ id ⊗ Φ_r⁻¹) ∘ (id ⊗ b_A)
/// (m ⊗ id) ∘ (id ⊗ Φ_l⁻¹ ⊗ id) ∘ (id ⊗ b̃_A)
/// ```
///
/// They agree entrywise; the first is the defining one.
pub fn delta_descriptions(a: &Algebra, k: &Pairing) -> Result<[Mor; 3], Error> {
    validate_pairing(a, k)?;
    let carrier = a.carrier();
    let id_a = a.id();
    let phi_r_inv = k.phi_r().invert()?;
    let phi_l_inv = k.phi_l().invert()?;

    let start = coev_right(carrier).tensor(&id_a);
    let mid = id_a.tensor(&phi_r_inv).tensor(&id_a).compose(&start)?;
    let d1 = id_a.tensor(a.m()).compose(&mid)?;

    let start = id_a.tensor(&coev_right(carrier));
    let mid = id_a.tensor(&id_a).tensor(&phi_r_inv).compose(&start)?;
    let d2 = a.m().tensor(&id_a).compose(&mid)?;

    let start = id_a.tensor(&coev_left(carrier));
    let mid = id_a.tensor(&phi_l_inv).tensor(&id_a).compose(&start)?;
    let d3 = a.m().tensor(&id_a).compose(&mid)?;

    Ok([d1, d2, d3])
}

/// `Δ_κ` and `ε_κ := κ ∘ (id ⊗ η)` for an invariant non-degenerate
/// pairing. The result satisfies the coalgebra axioms and the bimodule
/// compatibility exactly.
pub fn coalgebra_from_pairing(a: &Algebra, k: &Pairing) -> Result<Coalgebra, Error> {
    validate_pairing(a, k)?;
    let carrier = a.carrier();
    let id_a = a.id();
    let phi_r_inv = k.phi_r().invert()?;
    let start = coev_right(carrier).tensor(&id_a);
    let mid = id_a.tensor(&phi_r_inv).tensor(&id_a).compose(&start)?;
    let delta = id_a.tensor(a.m()).compose(&mid)?;
    let eps = k.kappa().compose(&id_a.tensor(a.eta()))?;
    Coalgebra::new(carrier.clone(), delta, eps)
}

/// `κ_φ := d̃_A ∘ (id ⊗ φ)` for any `φ : A → A*`. Always defined;
/// `Φ_{κ_φ,l} = φ` on the nose, and κ_φ is invariant iff φ is a left
/// module morphism, non-degenerate iff φ is invertible.
pub fn pairing_from_phi(a: &Algebra, phi: &Mor) -> Result<Pairing, Error> {
    let carrier = a.carrier();
    if phi.dom() != [carrier.clone()] || phi.cod() != [carrier.dual()] {
        return Err(Error::DomainMismatch {
            expected: format!("{:?} → {:?}", carrier, carrier.dual()),
            got: format!("{} → {}", phi.dom_label(), phi.cod_label()),
        });
    }
    let id_a = a.id();
    let kappa = ev_left(carrier).compose(&id_a.tensor(phi))?;
    let pairing = Pairing::new(carrier.clone(), kappa)?;
    assert_eq!(pairing.phi_l(), phi, "Φ_{{κ_φ,l}} = φ by the zig-zags");
    Ok(pairing)
}

/// The cached `Φ_l` of a pairing; `Φ_r = wee(Φ_l)` relates the two.
pub fn phi_from_pairing(k: &Pairing) -> Mor {
    k.phi_l().clone()
}

/// Whether a pairing is symmetric: the exchange of its arguments through
/// the dualities reproduces it. Both duality routes are evaluated and must
/// agree.
pub fn check_symmetric(k: &Pairing) -> bool {
    let main = exchanged_pairing(k);
    let alt = exchanged_pairing_alt(k);
    assert_eq!(main, alt, "the two exchange routes agree in a sovereign backend");
    &main == k.kappa()
}

/// Whether `φ : A → A*` defines a symmetric structure: `wee(φ) = φ`,
/// i.e. φ is simultaneously a morphism of left and right modules.
pub fn check_symmetric_phi(phi: &Mor, a: &Algebra) -> Result<bool, Error> {
    let carrier = a.carrier();
    if phi.dom() != [carrier.clone()] || phi.cod() != [carrier.dual()] {
        return Err(Error::DomainMismatch {
            expected: format!("{:?} → {:?}", carrier, carrier.dual()),
            got: format!("{} → {}", phi.dom_label(), phi.cod_label()),
        });
    }
    Ok(&wee(phi)? == phi)
}

/// The endomorphism measuring failure of symmetry of a Frobenius pair,
/// built from the counit presentation alone:
///
/// ```text
/// ℧_ε := (d_A ⊗ id) ∘ [id ⊗ (Δ ∘ η ∘ ε ∘ m)] ∘ (b̃_A ⊗ id)
/// ```
///
/// It equals `Φ_r⁻¹ ∘ Φ_l` for the pairing `κ_ε`, and the structure is
/// symmetric exactly when it is the identity.
pub fn nakayama_endo_from_counit(a: &Algebra, c: &Coalgebra) -> Result<Mor, Error> {
    validate_counit_structure(a, c)?;
    let carrier = a.carrier();
    let id_a = a.id();
    let id_ad = Mor::identity(&[carrier.dual()]);
    let inner = c
        .delta()
        .compose(a.eta())?
        .compose(c.eps())?
        .compose(a.m())?;
    let start = coev_left(carrier).tensor(&id_a);
    let mid = id_ad.tensor(&inner).compose(&start)?;
    ev_right(carrier).tensor(&id_a).compose(&mid)
}

/// Tri-state verification flags of a [`FrobeniusPackage`]; `None` means
/// not yet decided.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FrobeniusFlags {
    pub invariant: Option<bool>,
    pub nondegenerate: Option<bool>,
    pub bimodule_compat: Option<bool>,
    pub symmetric: Option<bool>,
}

/// A carrier algebra with whichever of the three presentations are known,
/// plus the derived Nakayama endomorphism. Presentations stored together
/// are mutually consistent under the conversions above — the constructors
/// produce them that way.
#[derive(Clone, Debug)]
pub struct FrobeniusPackage {
    algebra: Algebra,
    delta_eps: Option<Coalgebra>,
    pairing: Option<Pairing>,
    phi_rho: Option<Mor>,
    nakayama_endo: Option<Mor>,
    flags: FrobeniusFlags,
}

impl FrobeniusPackage {
    /// Builds the full package from a `(Δ, ε)` presentation.
    pub fn from_counit(algebra: Algebra, coalgebra: Coalgebra) -> Result<Self, Error> {
        let pairing = kappa_from_counit(&algebra, &coalgebra)?;
        Self::assemble(algebra, Some(coalgebra), pairing)
    }

    /// Builds the full package from an invariant non-degenerate pairing.
    pub fn from_pairing(algebra: Algebra, pairing: Pairing) -> Result<Self, Error> {
        let alg = check_algebra(&algebra);
        if !alg.passed() {
            return Err(Error::AxiomFailure(format!(
                "algebra axioms: {}",
                alg.failure_summary()
            )));
        }
        validate_pairing(&algebra, &pairing)?;
        Self::assemble(algebra, None, pairing)
    }

    /// Builds a package from a module map `φ : A → A*`. The pairing `κ_φ`
    /// always exists; the remaining presentations are derived only when φ
    /// is an invertible module morphism, and the flags record what held.
    pub fn from_phi(algebra: Algebra, phi: Mor) -> Result<Self, Error> {
        let alg = check_algebra(&algebra);
        if !alg.passed() {
            return Err(Error::AxiomFailure(format!(
                "algebra axioms: {}",
                alg.failure_summary()
            )));
        }
        let pairing = pairing_from_phi(&algebra, &phi)?;
        let invariant = check_invariance(&algebra, &pairing)?;
        let nondegenerate = check_nondegenerate(&pairing).nondegenerate;
        if invariant && nondegenerate {
            return Self::assemble(algebra, None, pairing);
        }
        Ok(FrobeniusPackage {
            algebra,
            delta_eps: None,
            pairing: Some(pairing),
            phi_rho: Some(phi),
            nakayama_endo: None,
            flags: FrobeniusFlags {
                invariant: Some(invariant),
                nondegenerate: Some(nondegenerate),
                bimodule_compat: None,
                symmetric: None,
            },
        })
    }

    fn assemble(
        algebra: Algebra,
        coalgebra: Option<Coalgebra>,
        pairing: Pairing,
    ) -> Result<Self, Error> {
        let coalgebra = match coalgebra {
            Some(c) => c,
            None => coalgebra_from_pairing(&algebra, &pairing)?,
        };
        let phi = pairing.phi_l().clone();
        let naka = pairing.phi_r().invert()?.compose(pairing.phi_l())?;
        let symmetric = check_symmetric(&pairing);
        assert_eq!(
            symmetric,
            naka.is_identity(),
            "symmetry of κ coincides with triviality of the Nakayama endomorphism"
        );
        Ok(FrobeniusPackage {
            algebra,
            delta_eps: Some(coalgebra),
            pairing: Some(pairing),
            phi_rho: Some(phi),
            nakayama_endo: Some(naka),
            flags: FrobeniusFlags {
                invariant: Some(true),
                nondegenerate: Some(true),
                bimodule_compat: Some(true),
                symmetric: Some(symmetric),
            },
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn delta_eps(&self) -> Option<&Coalgebra> {
        self.delta_eps.as_ref()
    }

    pub fn pairing(&self) -> Option<&Pairing> {
        self.pairing.as_ref()
    }

    pub fn phi_rho(&self) -> Option<&Mor> {
        self.phi_rho.as_ref()
    }

    pub fn nakayama_endo(&self) -> Option<&Mor> {
        self.nakayama_endo.as_ref()
    }

    pub fn flags(&self) -> &FrobeniusFlags {
        &self.flags
    }
}
