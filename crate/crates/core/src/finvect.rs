//! Finite-dimensional spaces with chosen bases, as a strict sovereign
//! monoidal category.
//!
//! Objects are labelled spaces; a dual object is the same space with the
//! dual basis, and taking duals twice gives back the original object on the
//! nose, so the left- and right-duality functors literally coincide.
//! Morphisms are exact rational matrices between tensor products of
//! objects; the tensor unit is dropped from domain/codomain lists at
//! construction, which is what strictness means here.
//!
//! The four (co)evaluation morphisms are pinned, in dual bases, to
//!
//! ```text
//! coev_right(U) = b_U : 1 → U ⊗ U*,   1 ↦ Σᵢ eᵢ ⊗ eⁱ
//! ev_right(U)   = d_U : U* ⊗ U → 1,   eⁱ ⊗ eⱼ ↦ δᵢⱼ
//! coev_left(U)  = b̃_U : 1 → U* ⊗ U,   1 ↦ Σᵢ eⁱ ⊗ eᵢ
//! ev_left(U)    = d̃_U : U ⊗ U* → 1,   eᵢ ⊗ eʲ ↦ δᵢⱼ
//! ```
//!
//! where `U*` names the dual of `U` (left and right duals being equal).
//! With these conventions all four zig-zag identities hold exactly.

use std::fmt;

use crate::error::Error;
use crate::exact::{Matrix, Scalar};

const UNIT_LABEL: &str = "1";

/// A finite-dimensional space identified by a base label, a dimension, and
/// whether it is the dual of the base object.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Obj {
    label: String,
    dim: usize,
    dualized: bool,
}

impl Obj {
    pub fn new(label: impl Into<String>, dim: usize) -> Result<Self, Error> {
        let label = label.into();
        if dim == 0 {
            return Err(Error::BadObject(format!("{label} has dimension 0")));
        }
        if label == UNIT_LABEL {
            return Err(Error::BadObject(format!(
                "label {UNIT_LABEL:?} is reserved for the tensor unit"
            )));
        }
        if label.is_empty() {
            return Err(Error::BadObject("empty label".into()));
        }
        Ok(Obj {
            label,
            dim,
            dualized: false,
        })
    }

    /// The tensor unit; one-dimensional, self-dual, invisible in tensor
    /// products.
    pub fn unit() -> Self {
        Obj {
            label: UNIT_LABEL.into(),
            dim: 1,
            dualized: false,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.label == UNIT_LABEL
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// The dual object. An involution: `u.dual().dual() == u`.
    pub fn dual(&self) -> Obj {
        if self.is_unit() {
            return self.clone();
        }
        Obj {
            label: self.label.clone(),
            dim: self.dim,
            dualized: !self.dualized,
        }
    }

    /// The object this one is the dual of, when it is a dual.
    pub fn is_dual_of(&self) -> Option<Obj> {
        self.dualized.then(|| self.dual())
    }
}

impl fmt::Debug for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dualized {
            write!(f, "{}*", self.label)
        } else {
            write!(f, "{}", self.label)
        }
    }
}

fn shape_label(objs: &[Obj]) -> String {
    if objs.is_empty() {
        return UNIT_LABEL.to_string();
    }
    objs.iter()
        .map(|o| format!("{o:?}"))
        .collect::<Vec<_>>()
        .join("⊗")
}

fn total_dim(objs: &[Obj]) -> usize {
    objs.iter().map(Obj::dim).product()
}

/// A morphism between tensor products of objects, stored as a dense matrix
/// of shape `(∏ cod dims) × (∏ dom dims)` over the lexicographic product
/// bases.
#[derive(Clone, PartialEq, Eq)]
pub struct Mor {
    dom: Vec<Obj>,
    cod: Vec<Obj>,
    matrix: Matrix,
}

impl Mor {
    /// Unit objects are removed from both shape lists (strictness); this
    /// never changes the matrix because the unit is one-dimensional.
    pub fn new(dom: Vec<Obj>, cod: Vec<Obj>, matrix: Matrix) -> Result<Self, Error> {
        let dom: Vec<Obj> = dom.into_iter().filter(|o| !o.is_unit()).collect();
        let cod: Vec<Obj> = cod.into_iter().filter(|o| !o.is_unit()).collect();
        let want_rows = total_dim(&cod);
        let want_cols = total_dim(&dom);
        if matrix.rows() != want_rows || matrix.cols() != want_cols {
            return Err(Error::MorShape {
                rows: matrix.rows(),
                cols: matrix.cols(),
                want_rows,
                want_cols,
            });
        }
        Ok(Mor { dom, cod, matrix })
    }

    pub fn identity(objs: &[Obj]) -> Mor {
        let objs: Vec<Obj> = objs.iter().filter(|o| !o.is_unit()).cloned().collect();
        let n = total_dim(&objs);
        Mor {
            dom: objs.clone(),
            cod: objs,
            matrix: Matrix::identity(n),
        }
    }

    pub fn dom(&self) -> &[Obj] {
        &self.dom
    }

    pub fn cod(&self) -> &[Obj] {
        &self.cod
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dom_label(&self) -> String {
        shape_label(&self.dom)
    }

    pub fn cod_label(&self) -> String {
        shape_label(&self.cod)
    }

    /// `self ∘ f`: apply `f` first. Defined only when `f.cod` equals
    /// `self.dom` object by object.
    pub fn compose(&self, f: &Mor) -> Result<Mor, Error> {
        if self.dom != f.cod {
            return Err(Error::DomainMismatch {
                expected: shape_label(&self.dom),
                got: shape_label(&f.cod),
            });
        }
        Ok(Mor {
            dom: f.dom.clone(),
            cod: self.cod.clone(),
            matrix: self.matrix.mul(&f.matrix)?,
        })
    }

    /// `self ⊗ g`: Kronecker product of matrices, concatenation of shape
    /// lists.
    pub fn tensor(&self, g: &Mor) -> Mor {
        let mut dom = self.dom.clone();
        dom.extend(g.dom.iter().cloned());
        let mut cod = self.cod.clone();
        cod.extend(g.cod.iter().cloned());
        Mor {
            dom,
            cod,
            matrix: self.matrix.kron(&g.matrix),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.matrix.is_identity()
    }

    /// The scalar carried by an endomorphism of the tensor unit.
    pub fn as_scalar(&self) -> Option<&Scalar> {
        (self.dom.is_empty() && self.cod.is_empty()).then(|| self.matrix.at(0, 0))
    }

    pub fn scale(&self, s: &Scalar) -> Mor {
        Mor {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            matrix: self.matrix.scale(s),
        }
    }

    /// Exact inverse for an invertible morphism with equal total dimensions.
    pub fn invert(&self) -> Result<Mor, Error> {
        Ok(Mor {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            matrix: self.matrix.invert()?,
        })
    }

    fn single_dom(&self) -> Result<&Obj, Error> {
        match (self.dom.as_slice(), self.cod.as_slice()) {
            ([u], [_]) => Ok(u),
            _ => Err(Error::NotSimple(format!(
                "{} → {}",
                self.dom_label(),
                self.cod_label()
            ))),
        }
    }

    fn single_cod(&self) -> Result<&Obj, Error> {
        self.single_dom()?;
        Ok(&self.cod[0])
    }
}

impl fmt::Debug for Mor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Mor {} → {} {:?}",
            self.dom_label(),
            self.cod_label(),
            self.matrix
        )
    }
}

/// `b_U : 1 → U ⊗ U*`, `1 ↦ Σᵢ eᵢ ⊗ eⁱ`.
pub fn coev_right(u: &Obj) -> Mor {
    let n = u.dim();
    let mut matrix = Matrix::zeros(n * n, 1);
    for i in 0..n {
        matrix.set(i * n + i, 0, Scalar::one());
    }
    Mor::new(vec![], vec![u.clone(), u.dual()], matrix).expect("shape by construction")
}

/// `d_U : U* ⊗ U → 1`, `eⁱ ⊗ eⱼ ↦ δᵢⱼ`.
pub fn ev_right(u: &Obj) -> Mor {
    let n = u.dim();
    let mut matrix = Matrix::zeros(1, n * n);
    for i in 0..n {
        matrix.set(0, i * n + i, Scalar::one());
    }
    Mor::new(vec![u.dual(), u.clone()], vec![], matrix).expect("shape by construction")
}

/// `b̃_U : 1 → U* ⊗ U`, `1 ↦ Σᵢ eⁱ ⊗ eᵢ`.
pub fn coev_left(u: &Obj) -> Mor {
    let n = u.dim();
    let mut matrix = Matrix::zeros(n * n, 1);
    for i in 0..n {
        matrix.set(i * n + i, 0, Scalar::one());
    }
    Mor::new(vec![], vec![u.dual(), u.clone()], matrix).expect("shape by construction")
}

/// `d̃_U : U ⊗ U* → 1`, `eᵢ ⊗ eʲ ↦ δᵢⱼ`.
pub fn ev_left(u: &Obj) -> Mor {
    let n = u.dim();
    let mut matrix = Matrix::zeros(1, n * n);
    for i in 0..n {
        matrix.set(0, i * n + i, Scalar::one());
    }
    Mor::new(vec![u.clone(), u.dual()], vec![], matrix).expect("shape by construction")
}

/// The left transpose of `f : U → V`, as the composite
/// `(id ⊗ d̃_V) ∘ (id ⊗ f ⊗ id) ∘ (b̃_U ⊗ id) : V* → U*`.
pub fn transpose_left(f: &Mor) -> Result<Mor, Error> {
    let u = f.single_dom()?.clone();
    let v = f.single_cod()?.clone();
    let id_ud = Mor::identity(&[u.dual()]);
    let id_vd = Mor::identity(&[v.dual()]);
    let start = coev_left(&u).tensor(&id_vd);
    let mid = id_ud.tensor(f).tensor(&id_vd).compose(&start)?;
    id_ud.tensor(&ev_left(&v)).compose(&mid)
}

/// The right transpose of `f : U → V`, as the composite
/// `(d_V ⊗ id) ∘ (id ⊗ f ⊗ id) ∘ (id ⊗ b_U) : V* → U*`.
///
/// Sovereignty of the backend is the statement that this equals
/// [`transpose_left`] entrywise for every `f`.
pub fn transpose_right(f: &Mor) -> Result<Mor, Error> {
    let u = f.single_dom()?.clone();
    let v = f.single_cod()?.clone();
    let id_ud = Mor::identity(&[u.dual()]);
    let id_vd = Mor::identity(&[v.dual()]);
    let start = id_vd.tensor(&coev_right(&u));
    let mid = id_vd.tensor(f).tensor(&id_ud).compose(&start)?;
    ev_right(&v).tensor(&id_ud).compose(&mid)
}

/// For `f : U → V*` produces `(d̃_V ⊗ id) ∘ (id ⊗ f ⊗ id) ∘ (id ⊗ b_U)`
/// in `Hom(V, U*)`. An isomorphism iff `f` is.
pub fn wee(f: &Mor) -> Result<Mor, Error> {
    let u = f.single_dom()?.clone();
    let c = f.single_cod()?.clone();
    let v = c.dual();
    let id_v = Mor::identity(&[v.clone()]);
    let id_ud = Mor::identity(&[u.dual()]);
    let start = id_v.tensor(&coev_right(&u));
    let mid = id_v.tensor(f).tensor(&id_ud).compose(&start)?;
    ev_left(&v).tensor(&id_ud).compose(&mid)
}

/// For `f : U → V*` produces `(id ⊗ d_V) ∘ (id ⊗ f ⊗ id) ∘ (b̃_U ⊗ id)`
/// in `Hom(V, U*)`. In this backend `eew(f) == wee(f)` always, and
/// `eew(wee(f)) == f`.
pub fn eew(f: &Mor) -> Result<Mor, Error> {
    let u = f.single_dom()?.clone();
    let c = f.single_cod()?.clone();
    let v = c.dual();
    let id_v = Mor::identity(&[v.clone()]);
    let id_ud = Mor::identity(&[u.dual()]);
    let start = coev_left(&u).tensor(&id_v);
    let mid = id_ud.tensor(f).tensor(&id_v).compose(&start)?;
    id_ud.tensor(&ev_right(&v)).compose(&mid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;

    fn obj(label: &str, dim: usize) -> Obj {
        Obj::new(label, dim).unwrap()
    }

    #[test]
    fn unit_is_reserved_and_self_dual() {
        assert!(Obj::new("1", 3).is_err());
        assert!(Obj::new("U", 0).is_err());
        let one = Obj::unit();
        assert_eq!(one.dual(), one);
        let u = obj("U", 4);
        assert_eq!(u.dual().dual(), u);
        assert_eq!(u.dual().is_dual_of(), Some(u.clone()));
        assert_eq!(u.is_dual_of(), None);
    }

    #[test]
    fn compose_identity_and_associativity() {
        let mut rng = sample::rng(21);
        let u = obj("U", 3);
        let v = obj("V", 3);
        let w = obj("W", 3);
        let x = obj("X", 3);
        let f = sample::random_mor(&mut rng, &[u.clone()], &[v.clone()]);
        let g = sample::random_mor(&mut rng, &[v.clone()], &[w.clone()]);
        let h = sample::random_mor(&mut rng, &[w.clone()], &[x.clone()]);
        assert_eq!(f.compose(&Mor::identity(&[u.clone()])).unwrap(), f);
        assert_eq!(Mor::identity(&[v.clone()]).compose(&f).unwrap(), f);
        let left = h.compose(&g).unwrap().compose(&f).unwrap();
        let right = h.compose(&g.compose(&f).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn compose_rejects_shape_mismatch() {
        let u = obj("U", 2);
        let v = obj("V", 3);
        let f = Mor::identity(&[u.clone()]);
        let g = Mor::identity(&[v.clone()]);
        assert!(g.compose(&f).is_err());
        // Same dimensions but different objects still do not compose.
        let w = obj("W", 2);
        let h = Mor::identity(&[w]);
        assert!(h.compose(&f).is_err());
    }

    #[test]
    fn tensor_unit_is_invisible() {
        let mut rng = sample::rng(22);
        let u = obj("U", 2);
        let v = obj("V", 3);
        let f = sample::random_mor(&mut rng, &[u.clone()], &[v.clone()]);
        let id_one = Mor::identity(&[Obj::unit()]);
        assert_eq!(f.tensor(&id_one), f);
        assert_eq!(id_one.tensor(&f), f);
        let id_uv = Mor::identity(&[u.clone(), v.clone()]);
        assert_eq!(
            Mor::identity(&[u.clone()]).tensor(&Mor::identity(&[v.clone()])),
            id_uv
        );
    }

    #[test]
    fn interchange_law() {
        let mut rng = sample::rng(23);
        let u = obj("U", 2);
        let v = obj("V", 3);
        let w = obj("W", 2);
        for _ in 0..5 {
            let f = sample::random_mor(&mut rng, &[v.clone()], &[w.clone()]);
            let fp = sample::random_mor(&mut rng, &[u.clone()], &[v.clone()]);
            let g = sample::random_mor(&mut rng, &[v.clone()], &[u.clone()]);
            let gp = sample::random_mor(&mut rng, &[w.clone()], &[v.clone()]);
            let lhs = f.tensor(&g).compose(&fp.tensor(&gp)).unwrap();
            let rhs = f.compose(&fp).unwrap().tensor(&g.compose(&gp).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn zig_zag_identities() {
        for dim in 1..=8 {
            let u = obj("U", dim);
            let id_u = Mor::identity(&[u.clone()]);
            let id_ud = Mor::identity(&[u.dual()]);
            // (id_U ⊗ d_U) ∘ (b_U ⊗ id_U) = id_U
            let z1 = id_u
                .tensor(&ev_right(&u))
                .compose(&coev_right(&u).tensor(&id_u))
                .unwrap();
            assert_eq!(z1, id_u);
            // (d_U ⊗ id_{U*}) ∘ (id_{U*} ⊗ b_U) = id_{U*}
            let z2 = ev_right(&u)
                .tensor(&id_ud)
                .compose(&id_ud.tensor(&coev_right(&u)))
                .unwrap();
            assert_eq!(z2, id_ud);
            // (d̃_U ⊗ id_U) ∘ (id_U ⊗ b̃_U) = id_U
            let z3 = ev_left(&u)
                .tensor(&id_u)
                .compose(&id_u.tensor(&coev_left(&u)))
                .unwrap();
            assert_eq!(z3, id_u);
            // (id_{U*} ⊗ d̃_U) ∘ (b̃_U ⊗ id_{U*}) = id_{U*}
            let z4 = id_ud
                .tensor(&ev_left(&u))
                .compose(&coev_left(&u).tensor(&id_ud))
                .unwrap();
            assert_eq!(z4, id_ud);
        }
    }

    #[test]
    fn evaluation_trace_gives_dimension() {
        let u = obj("U", 4);
        let tr = ev_right(&u).compose(&coev_left(&u)).unwrap();
        assert_eq!(tr.as_scalar().unwrap(), &Scalar::from_int(4));
    }

    #[test]
    fn dim_one_evaluations_are_trivial() {
        let u = obj("U", 1);
        for m in [coev_right(&u), coev_left(&u)] {
            assert_eq!(m.matrix(), &Matrix::identity(1));
        }
        for m in [ev_right(&u), ev_left(&u)] {
            assert_eq!(m.matrix(), &Matrix::identity(1));
        }
    }

    #[test]
    fn transposes_agree_and_antidistribute() {
        let mut rng = sample::rng(24);
        let u = obj("U", 2);
        let v = obj("V", 3);
        let w = obj("W", 4);
        let f = sample::random_mor(&mut rng, &[u.clone()], &[v.clone()]);
        let g = sample::random_mor(&mut rng, &[v.clone()], &[w.clone()]);
        let tl = transpose_left(&f).unwrap();
        let tr = transpose_right(&f).unwrap();
        assert_eq!(tl, tr);
        assert_eq!(tl.matrix(), &f.matrix().transpose());
        let id = Mor::identity(&[u.clone()]);
        assert_eq!(transpose_left(&id).unwrap(), Mor::identity(&[u.dual()]));
        // (g ∘ f)ᵀ = fᵀ ∘ gᵀ
        let gf = g.compose(&f).unwrap();
        let lhs = transpose_left(&gf).unwrap();
        let rhs = transpose_left(&f)
            .unwrap()
            .compose(&transpose_left(&g).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn wee_eew_round_trip() {
        let mut rng = sample::rng(25);
        let u = obj("U", 2);
        let v = obj("V", 3);
        for _ in 0..5 {
            let f = sample::random_mor(&mut rng, &[u.clone()], &[v.dual()]);
            let w = wee(&f).unwrap();
            assert_eq!(eew(&f).unwrap(), w);
            assert_eq!(eew(&w).unwrap(), f);
            assert_eq!(w.dom(), &[v.clone()]);
            assert_eq!(w.cod(), &[u.dual()]);
        }
    }

    #[test]
    fn wee_of_identity_is_double_dual_identification() {
        for dim in 1..=8 {
            let u = obj("U", dim);
            let id_dual = Mor::identity(&[u.dual()]);
            let w = wee(&id_dual).unwrap();
            let e = eew(&id_dual).unwrap();
            assert_eq!(w, e);
            assert_eq!(w, Mor::identity(&[u.clone()]));
        }
    }

    #[test]
    fn wee_inverse_formula() {
        // (wee f)⁻¹ = (d_U ⊗ id) ∘ (id ⊗ f⁻¹ ⊗ id) ∘ (id ⊗ b̃_V) for f : U → V*.
        let mut rng = sample::rng(26);
        let u = obj("U", 3);
        let v = obj("V", 3);
        let f = Mor::new(
            vec![u.clone()],
            vec![v.dual()],
            sample::random_invertible(&mut rng, 3),
        )
        .unwrap();
        let w = wee(&f).unwrap();
        let f_inv = f.invert().unwrap();
        let id_ud = Mor::identity(&[u.dual()]);
        let id_v = Mor::identity(&[v.clone()]);
        let start = id_ud.tensor(&coev_left(&v));
        let mid = id_ud.tensor(&f_inv).tensor(&id_v).compose(&start).unwrap();
        let w_inv = ev_right(&u).tensor(&id_v).compose(&mid).unwrap();
        assert_eq!(w.compose(&w_inv).unwrap(), Mor::identity(&[u.dual()]));
        assert_eq!(w_inv.compose(&w).unwrap(), Mor::identity(&[v.clone()]));
    }
}
