//! Structure-constant representations of algebras, coalgebras, bialgebras and
//! Hopf algebras, together with exact axiom checkers.
//!
//! Validity is deliberately not a type invariant: the theorem verifier needs
//! candidate structures that fail their axioms, so constructors only check
//! shapes and every law is a [`CheckReport`] item.

use crate::error::Error;
use crate::field::Field;
use crate::report::CheckReport;
use crate::tensorlin::{compose_chain, flip, permute_factors, LinearMap};

/// An algebra candidate: multiplication `A ⊗ A → A` and unit `1 → A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraData<F: Field> {
    dim: usize,
    mult: LinearMap<F>,
    unit: LinearMap<F>,
}

impl<F: Field> AlgebraData<F> {
    pub fn new(mult: LinearMap<F>, unit: LinearMap<F>) -> Result<Self, Error> {
        if mult.field() != unit.field() {
            return Err(Error::FieldMismatch);
        }
        let dim = mult.codomain_total();
        if dim == 0 {
            return Err(Error::Invalid("zero-dimensional carrier".into()));
        }
        if mult.domain_total() != dim * dim {
            return Err(Error::DimMismatch {
                context: "algebra multiplication",
                expected: dim * dim,
                found: mult.domain_total(),
            });
        }
        if unit.domain_total() != 1 || unit.codomain_total() != dim {
            return Err(Error::DimMismatch {
                context: "algebra unit",
                expected: dim,
                found: unit.codomain_total(),
            });
        }
        Ok(AlgebraData {
            dim,
            mult: mult.reshaped(vec![dim], vec![dim, dim])?,
            unit: unit.reshaped(vec![dim], vec![])?,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> &F {
        self.mult.field()
    }

    pub fn mult(&self) -> &LinearMap<F> {
        &self.mult
    }

    pub fn unit(&self) -> &LinearMap<F> {
        &self.unit
    }

    /// Multiply two elements (maps `1 → A`).
    pub fn product(&self, u: &LinearMap<F>, v: &LinearMap<F>) -> Result<LinearMap<F>, Error> {
        self.mult.compose(&u.tensor(v)?)
    }
}

/// A coalgebra candidate: comultiplication `C → C ⊗ C` and counit `C → 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalgebraData<F: Field> {
    dim: usize,
    comult: LinearMap<F>,
    counit: LinearMap<F>,
}

impl<F: Field> CoalgebraData<F> {
    pub fn new(comult: LinearMap<F>, counit: LinearMap<F>) -> Result<Self, Error> {
        if comult.field() != counit.field() {
            return Err(Error::FieldMismatch);
        }
        let dim = comult.domain_total();
        if dim == 0 {
            return Err(Error::Invalid("zero-dimensional carrier".into()));
        }
        if comult.codomain_total() != dim * dim {
            return Err(Error::DimMismatch {
                context: "coalgebra comultiplication",
                expected: dim * dim,
                found: comult.codomain_total(),
            });
        }
        if counit.domain_total() != dim || counit.codomain_total() != 1 {
            return Err(Error::DimMismatch {
                context: "coalgebra counit",
                expected: dim,
                found: counit.domain_total(),
            });
        }
        Ok(CoalgebraData {
            dim,
            comult: comult.reshaped(vec![dim, dim], vec![dim])?,
            counit: counit.reshaped(vec![], vec![dim])?,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> &F {
        self.comult.field()
    }

    pub fn comult(&self) -> &LinearMap<F> {
        &self.comult
    }

    pub fn counit(&self) -> &LinearMap<F> {
        &self.counit
    }
}

/// An algebra and a coalgebra on one carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BialgebraData<F: Field> {
    algebra: AlgebraData<F>,
    coalgebra: CoalgebraData<F>,
}

impl<F: Field> BialgebraData<F> {
    pub fn new(algebra: AlgebraData<F>, coalgebra: CoalgebraData<F>) -> Result<Self, Error> {
        if algebra.field() != coalgebra.field() {
            return Err(Error::FieldMismatch);
        }
        if algebra.dim() != coalgebra.dim() {
            return Err(Error::DimMismatch {
                context: "bialgebra carrier",
                expected: algebra.dim(),
                found: coalgebra.dim(),
            });
        }
        Ok(BialgebraData { algebra, coalgebra })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> &F {
        self.algebra.field()
    }

    pub fn algebra(&self) -> &AlgebraData<F> {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &CoalgebraData<F> {
        &self.coalgebra
    }

    pub fn mult(&self) -> &LinearMap<F> {
        self.algebra.mult()
    }

    pub fn unit(&self) -> &LinearMap<F> {
        self.algebra.unit()
    }

    pub fn comult(&self) -> &LinearMap<F> {
        self.coalgebra.comult()
    }

    pub fn counit(&self) -> &LinearMap<F> {
        self.coalgebra.counit()
    }

    /// `Δ` is symmetric as a matrix identity: `flip ∘ Δ = Δ`.
    pub fn is_cocommutative(&self) -> bool {
        let d = self.dim();
        let sw = flip(self.field().clone(), d, d);
        sw.compose(self.comult())
            .expect("shape checked")
            .same_matrix(self.comult())
    }

    /// `m ∘ flip = m` as matrices.
    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        let sw = flip(self.field().clone(), d, d);
        self.mult()
            .compose(&sw)
            .expect("shape checked")
            .same_matrix(self.mult())
    }
}

/// A bialgebra candidate plus an antipode `S: H → H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfData<F: Field> {
    bialgebra: BialgebraData<F>,
    antipode: LinearMap<F>,
}

impl<F: Field> HopfData<F> {
    pub fn new(bialgebra: BialgebraData<F>, antipode: LinearMap<F>) -> Result<Self, Error> {
        if bialgebra.field() != antipode.field() {
            return Err(Error::FieldMismatch);
        }
        let dim = bialgebra.dim();
        if antipode.domain_total() != dim || antipode.codomain_total() != dim {
            return Err(Error::DimMismatch {
                context: "antipode",
                expected: dim,
                found: antipode.domain_total(),
            });
        }
        Ok(HopfData {
            bialgebra,
            antipode: antipode.reshaped(vec![dim], vec![dim])?,
        })
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim()
    }

    pub fn field(&self) -> &F {
        self.bialgebra.field()
    }

    pub fn bialgebra(&self) -> &BialgebraData<F> {
        &self.bialgebra
    }

    pub fn antipode(&self) -> &LinearMap<F> {
        &self.antipode
    }

    pub fn mult(&self) -> &LinearMap<F> {
        self.bialgebra.mult()
    }

    pub fn unit(&self) -> &LinearMap<F> {
        self.bialgebra.unit()
    }

    pub fn comult(&self) -> &LinearMap<F> {
        self.bialgebra.comult()
    }

    pub fn counit(&self) -> &LinearMap<F> {
        self.bialgebra.counit()
    }
}

/// An element `R = Σ coeff[i][j] e_i ⊗ e_j` of `H ⊗ H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMatrix<F: Field> {
    dim: usize,
    element: LinearMap<F>,
}

impl<F: Field> RMatrix<F> {
    pub fn from_coeffs(field: F, coeffs: &[Vec<F::Elem>]) -> Result<Self, Error> {
        let dim = coeffs.len();
        let mut triplets = Vec::new();
        for (i, row) in coeffs.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimMismatch {
                    context: "R-matrix coefficients",
                    expected: dim,
                    found: row.len(),
                });
            }
            for (j, v) in row.iter().enumerate() {
                if !field.is_zero(v) {
                    triplets.push((i * dim + j, 0, v.clone()));
                }
            }
        }
        let element = LinearMap::from_triplets(field, vec![dim, dim], vec![], triplets)?;
        Ok(RMatrix { dim, element })
    }

    /// Wrap an element `1 → H ⊗ H`.
    pub fn from_element(element: LinearMap<F>) -> Result<Self, Error> {
        if element.domain_total() != 1 {
            return Err(Error::DimMismatch {
                context: "R-matrix element",
                expected: 1,
                found: element.domain_total(),
            });
        }
        let sq = element.codomain_total();
        let dim = (1..).find(|d| d * d >= sq).unwrap();
        if dim * dim != sq {
            return Err(Error::Invalid(
                "R-matrix carrier is not a tensor square".into(),
            ));
        }
        Ok(RMatrix {
            dim,
            element: element.reshaped(vec![dim, dim], vec![])?,
        })
    }

    /// `R = 1 ⊗ 1` for the given unit.
    pub fn unit_unit(h: &HopfData<F>) -> Self {
        let element = h.unit().tensor(h.unit()).expect("same field");
        RMatrix {
            dim: h.dim(),
            element,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn element(&self) -> &LinearMap<F> {
        &self.element
    }

    pub fn coeff(&self, i: usize, j: usize) -> F::Elem {
        self.element.entry(i * self.dim + j, 0)
    }
}

/// A bilinear form `σ(e_i, e_j) = coeff[i][j]` on `H`, stored as a map
/// `H ⊗ H → 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaForm<F: Field> {
    dim: usize,
    form: LinearMap<F>,
}

impl<F: Field> SigmaForm<F> {
    pub fn from_coeffs(field: F, coeffs: &[Vec<F::Elem>]) -> Result<Self, Error> {
        let dim = coeffs.len();
        let mut triplets = Vec::new();
        for (i, row) in coeffs.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimMismatch {
                    context: "sigma coefficients",
                    expected: dim,
                    found: row.len(),
                });
            }
            for (j, v) in row.iter().enumerate() {
                if !field.is_zero(v) {
                    triplets.push((0, i * dim + j, v.clone()));
                }
            }
        }
        let form = LinearMap::from_triplets(field, vec![], vec![dim, dim], triplets)?;
        Ok(SigmaForm { dim, form })
    }

    /// The trivial form `σ(h, h') = ε(h) ε(h')`.
    pub fn trivial(h: &HopfData<F>) -> Self {
        let form = h.counit().tensor(h.counit()).expect("same field");
        SigmaForm { dim: h.dim(), form }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn form(&self) -> &LinearMap<F> {
        &self.form
    }

    pub fn coeff(&self, i: usize, j: usize) -> F::Elem {
        self.form.entry(0, i * self.dim + j)
    }
}

/// Associativity and the two unit laws, as matrix identities.
pub fn check_algebra<F: Field>(a: &AlgebraData<F>) -> CheckReport {
    let f = a.field().clone();
    let d = a.dim();
    let id = LinearMap::identity(f, vec![d]);
    let m = a.mult();
    let mut report = CheckReport::new();
    let left = m.compose(&m.tensor(&id).unwrap()).unwrap();
    let right = m.compose(&id.tensor(m).unwrap()).unwrap();
    report.push_identity("algebra_assoc", &left, &right);
    let unit_left = m.compose(&a.unit().tensor(&id).unwrap()).unwrap();
    report.push_identity("algebra_unit_left", &unit_left, &id);
    let unit_right = m.compose(&id.tensor(a.unit()).unwrap()).unwrap();
    report.push_identity("algebra_unit_right", &unit_right, &id);
    report
}

/// Coassociativity and the two counit laws.
pub fn check_coalgebra<F: Field>(c: &CoalgebraData<F>) -> CheckReport {
    let f = c.field().clone();
    let d = c.dim();
    let id = LinearMap::identity(f, vec![d]);
    let cm = c.comult();
    let mut report = CheckReport::new();
    let left = cm.tensor(&id).unwrap().compose(cm).unwrap();
    let right = id.tensor(cm).unwrap().compose(cm).unwrap();
    report.push_identity("coalgebra_coassoc", &left, &right);
    let counit_left = c.counit().tensor(&id).unwrap().compose(cm).unwrap();
    report.push_identity("coalgebra_counit_left", &counit_left, &id);
    let counit_right = id.tensor(c.counit()).unwrap().compose(cm).unwrap();
    report.push_identity("coalgebra_counit_right", &counit_right, &id);
    report
}

/// All bialgebra axioms with the symmetric flip as braiding.
pub fn check_bialgebra<F: Field>(b: &BialgebraData<F>) -> CheckReport {
    let f = b.field().clone();
    let d = b.dim();
    let id = LinearMap::identity(f.clone(), vec![d]);
    let sw = flip(f.clone(), d, d);
    let (m, eta, cm, eps) = (b.mult(), b.unit(), b.comult(), b.counit());
    let mut report = check_algebra(b.algebra());
    report.absorb("", check_coalgebra(b.coalgebra()));

    // Δ(ab) = Δ(a)Δ(b), with the middle factors flipped
    let lhs = cm.compose(m).unwrap();
    let mm = m.tensor(m).unwrap();
    let mid = id.tensor(&sw).unwrap().tensor(&id).unwrap();
    let dd = cm.tensor(cm).unwrap();
    let rhs = compose_chain(&[&mm, &mid, &dd]).unwrap();
    report.push_identity("bialgebra_delta_mult", &lhs, &rhs);

    let lhs = eps.compose(m).unwrap();
    let rhs = eps.tensor(eps).unwrap();
    report.push_identity("bialgebra_eps_mult", &lhs, &rhs);

    let lhs = cm.compose(eta).unwrap();
    let rhs = eta.tensor(eta).unwrap();
    report.push_identity("bialgebra_delta_unit", &lhs, &rhs);

    let lhs = eps.compose(eta).unwrap();
    let rhs = LinearMap::identity(f, vec![]);
    report.push_identity("bialgebra_eps_unit", &lhs, &rhs);
    report
}

/// Bialgebra axioms plus the antipode law
/// `m ∘ (S ⊗ id) ∘ Δ = η ∘ ε = m ∘ (id ⊗ S) ∘ Δ`.
pub fn check_hopf<F: Field>(h: &HopfData<F>) -> CheckReport {
    let f = h.field().clone();
    let d = h.dim();
    let id = LinearMap::identity(f, vec![d]);
    let s = h.antipode();
    let mut report = check_bialgebra(h.bialgebra());
    let unit_counit = h.unit().compose(h.counit()).unwrap();
    let left = compose_chain(&[h.mult(), &s.tensor(&id).unwrap(), h.comult()]).unwrap();
    report.push_identity("hopf_antipode_left", &left, &unit_counit);
    let right = compose_chain(&[h.mult(), &id.tensor(s).unwrap(), h.comult()]).unwrap();
    report.push_identity("hopf_antipode_right", &right, &unit_counit);
    report
}

/// `S^{-1}`, or an error if the antipode matrix is singular.
pub fn antipode_inverse<F: Field>(h: &HopfData<F>) -> Result<LinearMap<F>, Error> {
    h.antipode().invert()
}

/// The tensor-product algebra on `X ⊗ Y`.
pub fn tensor_algebra<F: Field>(
    x: &AlgebraData<F>,
    y: &AlgebraData<F>,
) -> Result<AlgebraData<F>, Error> {
    let f = x.field().clone();
    let id_x = LinearMap::identity(f.clone(), vec![x.dim()]);
    let id_y = LinearMap::identity(f.clone(), vec![y.dim()]);
    let sw = flip(f, y.dim(), x.dim());
    let rearrange = id_x.tensor(&sw)?.tensor(&id_y)?;
    let mult = x.mult().tensor(y.mult())?.compose(&rearrange)?;
    let unit = x.unit().tensor(y.unit())?;
    AlgebraData::new(mult, unit)
}

/// The tensor-product coalgebra on `X ⊗ Y`.
pub fn tensor_coalgebra<F: Field>(
    x: &CoalgebraData<F>,
    y: &CoalgebraData<F>,
) -> Result<CoalgebraData<F>, Error> {
    let f = x.field().clone();
    let id_x = LinearMap::identity(f.clone(), vec![x.dim()]);
    let id_y = LinearMap::identity(f.clone(), vec![y.dim()]);
    let sw = flip(f, x.dim(), y.dim());
    let rearrange = id_x.tensor(&sw)?.tensor(&id_y)?;
    let comult = rearrange.compose(&x.comult().tensor(y.comult())?)?;
    let counit = x.counit().tensor(y.counit())?;
    CoalgebraData::new(comult, counit)
}

/// The one-dimensional algebra `k`.
pub fn unit_algebra<F: Field>(field: F) -> AlgebraData<F> {
    let mult = LinearMap::identity(field.clone(), vec![])
        .reshaped(vec![1], vec![1, 1])
        .unwrap();
    let unit = LinearMap::identity(field, vec![])
        .reshaped(vec![1], vec![])
        .unwrap();
    AlgebraData::new(mult, unit).expect("well shaped")
}

/// Convolution inverse of `f: C → A` in the convolution algebra
/// `Hom(C, A)`, found by an exact linear solve; errors when no inverse
/// exists.
pub fn convolution_inverse<F: Field>(
    c: &CoalgebraData<F>,
    a: &AlgebraData<F>,
    f: &LinearMap<F>,
) -> Result<LinearMap<F>, Error> {
    if f.field() != c.field() || f.field() != a.field() {
        return Err(Error::FieldMismatch);
    }
    if f.domain_total() != c.dim() || f.codomain_total() != a.dim() {
        return Err(Error::DimMismatch {
            context: "convolution argument",
            expected: c.dim(),
            found: f.domain_total(),
        });
    }
    let field = f.field().clone();
    let (dc, da) = (c.dim(), a.dim());
    let unknowns = da * dc;
    // Matrix of g ↦ m ∘ (f ⊗ g) ∘ Δ (resp. g ⊗ f), obtained by feeding basis
    // matrices E_{r,q} through the actual composition.
    let mut triplets = Vec::new();
    let target = a.unit().compose(c.counit())?;
    for r in 0..da {
        for q in 0..dc {
            let basis =
                LinearMap::from_triplets(field.clone(), vec![da], vec![dc], [(r, q, field.one())])?;
            let col = r * dc + q;
            let left = compose_chain(&[a.mult(), &f.tensor(&basis)?, c.comult()])?;
            let right = compose_chain(&[a.mult(), &basis.tensor(f)?, c.comult()])?;
            for (out_r, out_c, map, offset) in [(da, dc, &left, 0), (da, dc, &right, unknowns)] {
                for i in 0..out_r {
                    for j in 0..out_c {
                        let v = map.entry(i, j);
                        if !field.is_zero(&v) {
                            triplets.push((offset + i * dc + j, col, v));
                        }
                    }
                }
            }
        }
    }
    let system =
        LinearMap::from_triplets(field.clone(), vec![2 * unknowns], vec![unknowns], triplets)?;
    let mut rhs_triplets = Vec::new();
    for i in 0..da {
        for j in 0..dc {
            let v = target.entry(i, j);
            if !field.is_zero(&v) {
                rhs_triplets.push((i * dc + j, 0, v.clone()));
                rhs_triplets.push((unknowns + i * dc + j, 0, v));
            }
        }
    }
    let rhs = LinearMap::from_triplets(field.clone(), vec![2 * unknowns], vec![1], rhs_triplets)?;
    let solution = system.solve(&rhs)?.ok_or(Error::NotConvolutionInvertible)?;
    let mut g_triplets = Vec::new();
    for r in 0..da {
        for q in 0..dc {
            let v = solution.entry(r * dc + q, 0);
            if !field.is_zero(&v) {
                g_triplets.push((r, q, v));
            }
        }
    }
    LinearMap::from_triplets(field, vec![da], vec![dc], g_triplets)
}

/// `R` embedded in legs (1,3) of `H ⊗ H ⊗ H`.
fn r13<F: Field>(h: &HopfData<F>, r: &RMatrix<F>) -> LinearMap<F> {
    let d = h.dim();
    let spread = permute_factors(h.field().clone(), &[d, d, d], &[0, 2, 1]).unwrap();
    spread
        .compose(&r.element().tensor(h.unit()).unwrap())
        .unwrap()
}

/// Quasitriangularity of `(H, R)`: counit laws, the two hexagon-type
/// comultiplication laws, and the intertwining `R Δ(h) = Δ^{cop}(h) R`.
pub fn check_quasitriangular<F: Field>(
    h: &HopfData<F>,
    r: &RMatrix<F>,
) -> Result<CheckReport, Error> {
    if r.dim() != h.dim() {
        return Err(Error::DimMismatch {
            context: "R-matrix carrier",
            expected: h.dim(),
            found: r.dim(),
        });
    }
    if r.element().field() != h.field() {
        return Err(Error::FieldMismatch);
    }
    let f = h.field().clone();
    let d = h.dim();
    let id = LinearMap::identity(f.clone(), vec![d]);
    let (eta, cm, eps) = (h.unit(), h.comult(), h.counit());
    let mut report = CheckReport::new();

    let lhs = eps.tensor(&id)?.compose(r.element())?;
    report.push_identity("qt_counit_left", &lhs, eta);
    let lhs = id.tensor(eps)?.compose(r.element())?;
    report.push_identity("qt_counit_right", &lhs, eta);

    // algebra structures on H⊗H and H⊗H⊗H for the leg products
    let h2 = tensor_algebra(h.bialgebra().algebra(), h.bialgebra().algebra())?;
    let h3 = tensor_algebra(&h2, h.bialgebra().algebra())?;
    let r13 = r13(h, r);
    let r23 = eta.tensor(r.element())?;
    let r12 = r.element().tensor(eta)?;

    let lhs = cm.tensor(&id)?.compose(r.element())?;
    let rhs = h3.product(&r13, &r23)?;
    report.push_identity("qt_hexagon_left", &lhs, &rhs);

    let lhs = id.tensor(cm)?.compose(r.element())?;
    let rhs = h3.product(&r13, &r12)?;
    report.push_identity("qt_hexagon_right", &lhs, &rhs);

    // R·Δ(h) = Δ^cop(h)·R as maps H → H ⊗ H
    let cop = flip(f, d, d).compose(cm)?;
    let lhs = h2.mult().compose(&r.element().tensor(cm)?)?;
    let rhs = h2.mult().compose(&cop.tensor(r.element())?)?;
    report.push_identity("qt_intertwine", &lhs, &rhs);
    Ok(report)
}

/// Coquasitriangularity of `(H, σ)`: the two multiplication laws, the
/// commutation law, unit laws, and convolution invertibility of `σ`.
pub fn check_coquasitriangular<F: Field>(
    h: &HopfData<F>,
    sigma: &SigmaForm<F>,
) -> Result<CheckReport, Error> {
    if sigma.dim() != h.dim() {
        return Err(Error::DimMismatch {
            context: "sigma carrier",
            expected: h.dim(),
            found: sigma.dim(),
        });
    }
    if sigma.form().field() != h.field() {
        return Err(Error::FieldMismatch);
    }
    let f = h.field().clone();
    let d = h.dim();
    let id = LinearMap::identity(f.clone(), vec![d]);
    let (m, eta, cm, eps) = (h.mult(), h.unit(), h.comult(), h.counit());
    let s = sigma.form();
    let ss = s.tensor(s)?;
    let mut report = CheckReport::new();

    // σ(ab, c) = σ(a, c₁) σ(b, c₂)
    let lhs = s.compose(&m.tensor(&id)?)?;
    let spread = id.tensor(&id)?.tensor(cm)?;
    let arrange = permute_factors(f.clone(), &[d, d, d, d], &[0, 2, 1, 3])?;
    let rhs = compose_chain(&[&ss, &arrange, &spread])?;
    report.push_identity("coqt_mult_left", &lhs, &rhs);

    // σ(a, bc) = σ(a₁, c) σ(a₂, b)
    let lhs = s.compose(&id.tensor(m)?)?;
    let spread = cm.tensor(&id)?.tensor(&id)?;
    let arrange = permute_factors(f.clone(), &[d, d, d, d], &[0, 2, 3, 1])?;
    let rhs = compose_chain(&[&ss, &arrange, &spread])?;
    report.push_identity("coqt_mult_right", &lhs, &rhs);

    // σ(a₁, b₁) a₂ b₂ = b₁ a₁ σ(a₂, b₂)
    let dd = cm.tensor(cm)?;
    let mid = id.tensor(&flip(f.clone(), d, d))?.tensor(&id)?;
    let lhs = compose_chain(&[&s.tensor(m)?, &mid, &dd])?;
    let arrange = permute_factors(f.clone(), &[d, d, d, d], &[1, 2, 0, 3])?;
    let rhs = compose_chain(&[&m.tensor(s)?, &arrange, &dd])?;
    report.push_identity("coqt_commute", &lhs, &rhs);

    let lhs = s.compose(&eta.tensor(&id)?)?;
    report.push_identity("coqt_unit_left", &lhs, eps);
    let lhs = s.compose(&id.tensor(eta)?)?;
    report.push_identity("coqt_unit_right", &lhs, eps);

    let cc = tensor_coalgebra(h.bialgebra().coalgebra(), h.bialgebra().coalgebra())?;
    let target = unit_algebra(f);
    let form = s.clone().reshaped(vec![1], vec![d * d])?;
    let invertible = convolution_inverse(&cc, &target, &form);
    report.push_pass("coqt_conv_invertible", invertible.is_ok());
    Ok(report)
}

/// The left adjoint action `h ⊗ h' ↦ h₁ h' S(h₂)` as a map `H ⊗ H → H`.
pub fn adjoint_action<F: Field>(h: &HopfData<F>) -> LinearMap<F> {
    let f = h.field().clone();
    let d = h.dim();
    let id = LinearMap::identity(f.clone(), vec![d]);
    let spread = h.comult().tensor(&id).unwrap();
    let arrange = permute_factors(f, &[d, d, d], &[0, 2, 1]).unwrap();
    let apply_s = id.tensor(&id).unwrap().tensor(h.antipode()).unwrap();
    let multiply = h.mult().compose(&h.mult().tensor(&id).unwrap()).unwrap();
    compose_chain(&[&multiply, &apply_s, &arrange, &spread]).unwrap()
}

/// The left coadjoint coaction `h ↦ S^{-1}(h₃) h₁ ⊗ h₂` as a map
/// `H → H ⊗ H`; fails when the antipode is singular.
pub fn coadjoint_coaction<F: Field>(h: &HopfData<F>) -> Result<LinearMap<F>, Error> {
    let f = h.field().clone();
    let d = h.dim();
    let id = LinearMap::identity(f.clone(), vec![d]);
    let s_inv = antipode_inverse(h)?;
    let sweedler3 = h.comult().tensor(&id)?.compose(h.comult())?;
    let arrange = permute_factors(f, &[d, d, d], &[1, 2, 0])?;
    let apply = s_inv.tensor(&id)?.tensor(&id)?;
    let multiply = h.mult().tensor(&id)?;
    compose_chain(&[&multiply, &apply, &arrange, &sweedler3])
}
