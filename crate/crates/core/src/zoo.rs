//! Deterministic generators for the example algebras used by the test
//! suites and the CLI: matrix algebras, group algebras from validated
//! Cayley tables, the quantum plane family, and the canonical Frobenius
//! structure on `X ⊗ X*`.
//!
//! Every generator hand-codes its coproduct and counit rather than
//! deriving them through the pairing conversions, so round-trip tests
//! against the conversion code are meaningful.

use crate::error::Error;
use crate::exact::{Matrix, Scalar};
use crate::finvect::{coev_left, coev_right, ev_left, ev_right, Mor, Obj};
use crate::frobenius::kappa_from_counit;
use crate::structures::{Algebra, Coalgebra, Pairing};

/// A generated algebra with its canonical coalgebra and the pairing
/// `κ_ε = ε ∘ m`, fully validated at generation time.
#[derive(Clone, Debug)]
pub struct GeneratedFrobenius {
    pub name: String,
    pub basis_labels: Vec<String>,
    pub algebra: Algebra,
    pub coalgebra: Coalgebra,
    pub pairing: Pairing,
}

fn assemble(
    name: String,
    basis_labels: Vec<String>,
    algebra: Algebra,
    coalgebra: Coalgebra,
) -> Result<GeneratedFrobenius, Error> {
    let pairing = kappa_from_counit(&algebra, &coalgebra)?;
    Ok(GeneratedFrobenius {
        name,
        basis_labels,
        algebra,
        coalgebra,
        pairing,
    })
}

/// Builds the product morphism from structure constants
/// `coeff(i, j, k)` = coefficient of `e_k` in `e_i · e_j`.
fn product_from_constants(
    carrier: &Obj,
    coeff: impl Fn(usize, usize, usize) -> Scalar,
) -> Mor {
    let n = carrier.dim();
    let matrix = Matrix::from_fn(n, n * n, |k, col| coeff(col / n, col % n, k));
    Mor::new(vec![carrier.clone(), carrier.clone()], vec![carrier.clone()], matrix)
        .expect("shape by construction")
}

/// Builds the coproduct from constants
/// `coeff(i, j, k)` = coefficient of `e_j ⊗ e_k` in `Δ(e_i)`.
fn coproduct_from_constants(
    carrier: &Obj,
    coeff: impl Fn(usize, usize, usize) -> Scalar,
) -> Mor {
    let n = carrier.dim();
    let matrix = Matrix::from_fn(n * n, n, |row, i| coeff(i, row / n, row % n));
    Mor::new(vec![carrier.clone()], vec![carrier.clone(), carrier.clone()], matrix)
        .expect("shape by construction")
}

fn vector_mor(carrier: &Obj, coords: impl Fn(usize) -> Scalar) -> Mor {
    let n = carrier.dim();
    let matrix = Matrix::from_fn(n, 1, |i, _| coords(i));
    Mor::new(vec![], vec![carrier.clone()], matrix).expect("shape by construction")
}

fn covector_mor(carrier: &Obj, coords: impl Fn(usize) -> Scalar) -> Mor {
    let n = carrier.dim();
    let matrix = Matrix::from_fn(1, n, |_, i| coords(i));
    Mor::new(vec![carrier.clone()], vec![], matrix).expect("shape by construction")
}

fn indicator(cond: bool) -> Scalar {
    if cond {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

/// The full matrix algebra on an `n`-dimensional space, with matrix-unit
/// basis `E_ij` (row-major), counit the trace, coproduct
/// `Δ(E_ij) = Σ_k E_ik ⊗ E_kj`, and the trace pairing.
pub fn matrix_algebra(n: usize) -> Result<GeneratedFrobenius, Error> {
    if n == 0 {
        return Err(Error::BadParameter("matrix algebra needs n ≥ 1".into()));
    }
    let carrier = Obj::new(format!("M{n}"), n * n)?;
    let row = |a: usize| a / n;
    let col = |a: usize| a % n;
    let m = product_from_constants(&carrier, |a, b, c| {
        indicator(col(a) == row(b) && row(c) == row(a) && col(c) == col(b))
    });
    let eta = vector_mor(&carrier, |a| indicator(row(a) == col(a)));
    let eps = covector_mor(&carrier, |a| indicator(row(a) == col(a)));
    let delta = coproduct_from_constants(&carrier, |a, b, c| {
        indicator(row(b) == row(a) && col(b) == row(c) && col(c) == col(a))
    });
    let algebra = Algebra::new(carrier.clone(), m, eta)?;
    let coalgebra = Coalgebra::new(carrier, delta, eps)?;
    let labels = (0..n)
        .flat_map(|i| (0..n).map(move |j| format!("E{}{}", i + 1, j + 1)))
        .collect();
    assemble(format!("M{n}"), labels, algebra, coalgebra)
}

/// The twisted trace pairing `κ_u(a, b) = tr(u·a·b)` on a matrix algebra,
/// for `u` the diagonal matrix with the given entries. Invariant always;
/// non-degenerate iff every entry is nonzero; symmetric iff `u` is
/// central.
pub fn matrix_pairing_twisted(algebra: &Algebra, diag: &[Scalar]) -> Result<Pairing, Error> {
    let dim = algebra.dim();
    let n = (1..=dim).find(|k| k * k == dim).ok_or_else(|| {
        Error::BadParameter("carrier dimension is not a square".into())
    })?;
    if diag.len() != n {
        return Err(Error::BadParameter(format!(
            "expected {n} diagonal entries, got {}",
            diag.len()
        )));
    }
    // κ_u(E_ij, E_kl) = δ_jk δ_il u_i.
    let gram = Matrix::from_fn(dim, dim, |a, b| {
        let (i, j) = (a / n, a % n);
        let (k, l) = (b / n, b % n);
        if j == k && i == l {
            diag[i].clone()
        } else {
            Scalar::zero()
        }
    });
    Pairing::from_gram(algebra.carrier().clone(), &gram)
}

/// A finite multiplication table, `products[i][j]` being the index of the
/// product of elements `i` and `j`.
#[derive(Clone, Debug)]
pub struct CayleyTable {
    pub name: String,
    pub products: Vec<Vec<usize>>,
}

impl CayleyTable {
    pub fn order(&self) -> usize {
        self.products.len()
    }

    /// Checks that the table is a group: rectangular with in-range
    /// entries, associative, with a two-sided identity and two-sided
    /// inverses. Returns the identity index and the inverse table.
    pub fn validate(&self) -> Result<(usize, Vec<usize>), Error> {
        let n = self.order();
        if n == 0 {
            return Err(Error::BadCayleyTable("empty table".into()));
        }
        for (i, row) in self.products.iter().enumerate() {
            if row.len() != n {
                return Err(Error::BadCayleyTable(format!("row {i} has wrong length")));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(Error::BadCayleyTable(format!(
                    "row {i} contains out-of-range element {bad}"
                )));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| self.products[e][x] == x && self.products[x][e] == x))
            .ok_or_else(|| Error::BadCayleyTable("no two-sided identity".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.products[self.products[a][b]][c] != self.products[a][self.products[b][c]]
                    {
                        return Err(Error::BadCayleyTable(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let mut inverses = vec![0; n];
        for a in 0..n {
            inverses[a] = (0..n)
                .find(|&b| self.products[a][b] == identity && self.products[b][a] == identity)
                .ok_or_else(|| Error::BadCayleyTable(format!("element {a} has no inverse")))?;
        }
        Ok((identity, inverses))
    }
}

/// The cyclic group of order `n`.
pub fn cyclic_table(n: usize) -> CayleyTable {
    let products = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    CayleyTable {
        name: format!("Z{n}"),
        products,
    }
}

/// The symmetric group on three letters, elements enumerated as the six
/// permutations of `(0,1,2)` in lexicographic one-line order, composed as
/// `(p·q)(i) = p(q(i))`.
pub fn s3_table() -> CayleyTable {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let index = |p: &[usize; 3]| perms.iter().position(|q| q == p).expect("closed");
    let products = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| index(&[p[q[0]], p[q[1]], p[q[2]]]))
                .collect()
        })
        .collect();
    CayleyTable {
        name: "S3".into(),
        products,
    }
}

/// The group algebra of a validated Cayley table, with `ε` the coefficient
/// of the identity, `Δ(g) = Σ_h (g·h) ⊗ h⁻¹`, and pairing
/// `κ(g, h) = δ_{gh=e}`.
pub fn group_algebra(table: &CayleyTable) -> Result<GeneratedFrobenius, Error> {
    let (identity, inverses) = table.validate()?;
    let n = table.order();
    let carrier = Obj::new(format!("k{}", table.name), n)?;
    let m = product_from_constants(&carrier, |i, j, k| indicator(table.products[i][j] == k));
    let eta = vector_mor(&carrier, |i| indicator(i == identity));
    let eps = covector_mor(&carrier, |i| indicator(i == identity));
    let delta = coproduct_from_constants(&carrier, |g, j, k| {
        // the h-summand contributes at (g·h, h⁻¹)
        indicator(table.products[g][inverses[k]] == j)
    });
    let algebra = Algebra::new(carrier.clone(), m, eta)?;
    let coalgebra = Coalgebra::new(carrier, delta, eps)?;
    let labels = (0..n).map(|i| format!("g{i}")).collect();
    assemble(format!("k{}", table.name), labels, algebra, coalgebra)
}

/// The quantum plane at parameter `q ≠ 0`: basis `(1, x, y, xy)` with
/// `x² = y² = 0` and `y·x = q·xy`; counit the coefficient of `xy`.
/// Symmetric exactly at `q = 1`.
pub fn quantum_plane(q: &Scalar) -> Result<GeneratedFrobenius, Error> {
    if q.is_zero() {
        return Err(Error::BadParameter("quantum plane needs q ≠ 0".into()));
    }
    let carrier = Obj::new("Lq", 4)?;
    const ONE: usize = 0;
    const X: usize = 1;
    const Y: usize = 2;
    const XY: usize = 3;
    let q_inv = q.recip().expect("q ≠ 0");

    let m = product_from_constants(&carrier, |i, j, k| {
        if i == ONE {
            return indicator(j == k);
        }
        if j == ONE {
            return indicator(i == k);
        }
        match (i, j) {
            (X, Y) => indicator(k == XY),
            (Y, X) => {
                if k == XY {
                    q.clone()
                } else {
                    Scalar::zero()
                }
            }
            _ => Scalar::zero(),
        }
    });
    let eta = vector_mor(&carrier, |i| indicator(i == ONE));
    let eps = covector_mor(&carrier, |i| indicator(i == XY));
    // Δ is multiplication into the Casimir element
    // xy ⊗ 1 + y ⊗ x + q⁻¹·x ⊗ y + 1 ⊗ xy.
    let delta = coproduct_from_constants(&carrier, |i, j, k| match i {
        ONE => match (j, k) {
            (XY, ONE) | (Y, X) | (ONE, XY) => Scalar::one(),
            (X, Y) => q_inv.clone(),
            _ => Scalar::zero(),
        },
        X => indicator((j, k) == (XY, X)) + indicator((j, k) == (X, XY)),
        Y => indicator((j, k) == (XY, Y)) + indicator((j, k) == (Y, XY)),
        XY => indicator((j, k) == (XY, XY)),
        _ => Scalar::zero(),
    });
    let algebra = Algebra::new(carrier.clone(), m, eta)?;
    let coalgebra = Coalgebra::new(carrier, delta, eps)?;
    let labels = ["1", "x", "y", "xy"].map(String::from).to_vec();
    assemble(format!("Lq({q})"), labels, algebra, coalgebra)
}

/// The canonical Frobenius structure on `X ⊗ X*`, all structural
/// morphisms built from the (co)evaluations of `X` and re-housed on a
/// fresh carrier of dimension `dim(X)²`:
///
/// * product `id_X ⊗ d_X ⊗ id_{X*}`, unit `b_X`,
/// * invariant element `(id_X ⊗ b̃_X ⊗ id_{X*}) ∘ b_X`,
/// * coproduct `(m ⊗ id) ∘ (id ⊗ e)`, counit `d̃_X`, rescaled if the
///   counit law picks up a factor.
#[derive(Clone, Debug)]
pub struct CanonicalDual {
    pub generated: GeneratedFrobenius,
    /// The factor `λ` with `(ε_raw ⊗ id) ∘ Δ = λ·id` that the counit was
    /// divided by; 1 with these conventions.
    pub eps_scale: Scalar,
}

pub fn canonical_dual_frobenius(dim_x: usize) -> Result<CanonicalDual, Error> {
    if dim_x == 0 {
        return Err(Error::BadParameter("canonical dual needs dim ≥ 1".into()));
    }
    let x = Obj::new("X", dim_x)?;
    let id_x = Mor::identity(&[x.clone()]);
    let id_xd = Mor::identity(&[x.dual()]);
    let carrier = Obj::new(format!("D{dim_x}"), dim_x * dim_x)?;

    let rehouse = |mor: &Mor, dom: Vec<Obj>, cod: Vec<Obj>| {
        Mor::new(dom, cod, mor.matrix().clone()).expect("dimension products agree")
    };

    let m_x = id_x.tensor(&ev_right(&x)).tensor(&id_xd);
    let m = rehouse(&m_x, vec![carrier.clone(), carrier.clone()], vec![carrier.clone()]);
    let eta = rehouse(&coev_right(&x), vec![], vec![carrier.clone()]);
    let eps_raw = rehouse(&ev_left(&x), vec![carrier.clone()], vec![]);
    let e_x = id_x
        .tensor(&coev_left(&x))
        .tensor(&id_xd)
        .compose(&coev_right(&x))
        .expect("shape by construction");
    let e = rehouse(&e_x, vec![], vec![carrier.clone(), carrier.clone()]);

    let id_a = Mor::identity(&[carrier.clone()]);
    let delta = m.tensor(&id_a).compose(&id_a.tensor(&e))?;

    let counit_law = eps_raw.tensor(&id_a).compose(&delta)?;
    let lambda = counit_law.matrix().at(0, 0).clone();
    if lambda.is_zero() || counit_law != id_a.scale(&lambda) {
        return Err(Error::Verification(
            "counit law is not a nonzero multiple of the identity".into(),
        ));
    }
    let eps = eps_raw.scale(&lambda.recip().expect("nonzero"));

    let algebra = Algebra::new(carrier.clone(), m, eta)?;
    let coalgebra = Coalgebra::new(carrier, delta, eps)?;
    let labels = (0..dim_x)
        .flat_map(|i| (0..dim_x).map(move |j| format!("E{}{}", i + 1, j + 1)))
        .collect();
    let generated = assemble(format!("D{dim_x}"), labels, algebra, coalgebra)?;
    Ok(CanonicalDual {
        generated,
        eps_scale: lambda,
    })
}

/// The fixed roster of packages every suite runs over: the unit algebra,
/// M2, M3, the group algebras of Z/2 and S3, the quantum plane at
/// q ∈ {−2, 1/2, 1, 2}, and the canonical duals of dimensions 1–3.
pub fn standard_suite() -> Vec<GeneratedFrobenius> {
    let mut suite = vec![
        matrix_algebra(1).expect("generator"),
        matrix_algebra(2).expect("generator"),
        matrix_algebra(3).expect("generator"),
        group_algebra(&cyclic_table(2)).expect("generator"),
        group_algebra(&s3_table()).expect("generator"),
    ];
    for q in [
        Scalar::from_int(-2),
        Scalar::ratio(1, 2),
        Scalar::from_int(1),
        Scalar::from_int(2),
    ] {
        suite.push(quantum_plane(&q).expect("generator"));
    }
    for dim in 1..=3 {
        suite.push(canonical_dual_frobenius(dim).expect("generator").generated);
    }
    suite
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::check_symmetric;
    use crate::structures::{check_algebra, check_coalgebra, check_frobenius_compat};

    #[test]
    fn all_generators_pass_all_checks() {
        for g in standard_suite() {
            assert!(check_algebra(&g.algebra).passed(), "{}", g.name);
            assert!(check_coalgebra(&g.coalgebra).passed(), "{}", g.name);
            assert!(
                check_frobenius_compat(&g.algebra, &g.coalgebra)
                    .unwrap()
                    .passed(),
                "{}",
                g.name
            );
        }
    }

    #[test]
    fn matrix_algebra_dim_one_is_trivial() {
        let g = matrix_algebra(1).unwrap();
        assert_eq!(g.algebra.dim(), 1);
        assert_eq!(g.pairing.gram(), Matrix::identity(1));
        let eps_eta = g.coalgebra.eps().compose(g.algebra.eta()).unwrap();
        assert_eq!(eps_eta.as_scalar().unwrap(), &Scalar::one());
    }

    #[test]
    fn trivial_group_gives_the_unit_algebra() {
        let g = group_algebra(&cyclic_table(1)).unwrap();
        assert_eq!(g.algebra.dim(), 1);
        assert_eq!(g.pairing.gram(), Matrix::identity(1));
    }

    #[test]
    fn trace_pairing_nondegenerate_up_to_four() {
        for n in 1..=4 {
            let g = matrix_algebra(n).unwrap();
            assert!(
                crate::structures::check_nondegenerate(&g.pairing).nondegenerate,
                "M{n}"
            );
        }
    }

    #[test]
    fn cayley_validation_rejects_broken_tables() {
        let mut broken = cyclic_table(3);
        broken.products[1][2] = 1; // not a latin square any more
        assert!(matches!(
            broken.validate(),
            Err(Error::BadCayleyTable(_))
        ));

        let no_identity = CayleyTable {
            name: "bad".into(),
            products: vec![vec![1, 1], vec![1, 1]],
        };
        assert!(no_identity.validate().is_err());
    }

    #[test]
    fn z2_pairing_is_symmetric_with_trivial_nakayama() {
        let g = group_algebra(&cyclic_table(2)).unwrap();
        assert!(check_symmetric(&g.pairing));
        let report = crate::nakayama::nakayama(&g.algebra, &g.pairing).unwrap();
        assert!(report.is_identity);
    }

    #[test]
    fn s3_passes_frobenius_and_symmetry() {
        let table = s3_table();
        assert!(table.validate().is_ok());
        let g = group_algebra(&table).unwrap();
        assert!(check_symmetric(&g.pairing));
    }

    #[test]
    fn quantum_plane_rejects_q_zero_and_sweeps_symmetry() {
        assert!(matches!(
            quantum_plane(&Scalar::zero()),
            Err(Error::BadParameter(_))
        ));
        for (q, symmetric) in [
            (Scalar::from_int(-2), false),
            (Scalar::from_int(-1), false),
            (Scalar::ratio(1, 2), false),
            (Scalar::from_int(1), true),
            (Scalar::from_int(2), false),
            (Scalar::from_int(3), false),
        ] {
            let g = quantum_plane(&q).unwrap();
            assert_eq!(check_symmetric(&g.pairing), symmetric, "q = {q}");
        }
    }

    #[test]
    fn canonical_dual_matches_matrix_units() {
        for n in 1..=3 {
            let d = canonical_dual_frobenius(n).unwrap();
            assert_eq!(d.eps_scale, Scalar::one());
            let m = matrix_algebra(n).unwrap();
            assert_eq!(
                d.generated.algebra.m().matrix(),
                m.algebra.m().matrix(),
                "products at n = {n}"
            );
            assert_eq!(d.generated.algebra.eta().matrix(), m.algebra.eta().matrix());
            assert_eq!(
                d.generated.coalgebra.delta().matrix(),
                m.coalgebra.delta().matrix()
            );
            assert_eq!(d.generated.coalgebra.eps().matrix(), m.coalgebra.eps().matrix());
            assert!(check_symmetric(&d.generated.pairing));
        }
    }
}
