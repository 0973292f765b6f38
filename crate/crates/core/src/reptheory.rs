//! Structure-constant (co)modules and the equivariant-structure checkers:
//! module/comodule (co)algebras, Yetter-Drinfeld modules and relative Hopf
//! modules.
//!
//! Sweedler translations follow a fixed convention: left actions are maps
//! `B ⊗ X → X` with `B` first, right actions are maps `X ⊗ A → X` with `A`
//! second, and left coactions are maps `X → B ⊗ X`.

use crate::error::Error;
use crate::field::Field;
use crate::hopfcore::{AlgebraData, BialgebraData, CoalgebraData};
use crate::report::CheckReport;
use crate::tensorlin::{compose_chain, flip, LinearMap};

/// A left `B`-module candidate: carrier and action `B ⊗ X → X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleData<F: Field> {
    carrier_dim: usize,
    action: LinearMap<F>,
}

impl<F: Field> ModuleData<F> {
    pub fn new(carrier_dim: usize, action: LinearMap<F>) -> Result<Self, Error> {
        if carrier_dim == 0 {
            return Err(Error::Invalid("zero-dimensional carrier".into()));
        }
        if action.codomain_total() != carrier_dim {
            return Err(Error::DimMismatch {
                context: "module action codomain",
                expected: carrier_dim,
                found: action.codomain_total(),
            });
        }
        if action.domain_total() % carrier_dim != 0 {
            return Err(Error::DimMismatch {
                context: "module action domain",
                expected: carrier_dim,
                found: action.domain_total(),
            });
        }
        let acting_dim = action.domain_total() / carrier_dim;
        Ok(ModuleData {
            carrier_dim,
            action: action.reshaped(vec![carrier_dim], vec![acting_dim, carrier_dim])?,
        })
    }

    pub fn carrier_dim(&self) -> usize {
        self.carrier_dim
    }

    /// Dimension of the algebra acting on the left.
    pub fn acting_dim(&self) -> usize {
        self.action.domain_dims()[0]
    }

    pub fn action(&self) -> &LinearMap<F> {
        &self.action
    }

    /// The trivial action `h · x = ε(h) x`.
    pub fn trivial(b: &BialgebraData<F>, carrier_dim: usize) -> Self {
        let id = LinearMap::identity(b.field().clone(), vec![carrier_dim]);
        let action = b.counit().tensor(&id).expect("same field");
        ModuleData::new(carrier_dim, action).expect("well shaped")
    }

    /// `B` acting on itself by multiplication.
    pub fn regular(b: &BialgebraData<F>) -> Self {
        ModuleData::new(b.dim(), b.mult().clone()).expect("well shaped")
    }
}

/// A left `B`-comodule candidate: carrier and coaction `X → B ⊗ X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComoduleData<F: Field> {
    carrier_dim: usize,
    coaction: LinearMap<F>,
}

impl<F: Field> ComoduleData<F> {
    pub fn new(carrier_dim: usize, coaction: LinearMap<F>) -> Result<Self, Error> {
        if carrier_dim == 0 {
            return Err(Error::Invalid("zero-dimensional carrier".into()));
        }
        if coaction.domain_total() != carrier_dim {
            return Err(Error::DimMismatch {
                context: "comodule coaction domain",
                expected: carrier_dim,
                found: coaction.domain_total(),
            });
        }
        if coaction.codomain_total() % carrier_dim != 0 {
            return Err(Error::DimMismatch {
                context: "comodule coaction codomain",
                expected: carrier_dim,
                found: coaction.codomain_total(),
            });
        }
        let coacting_dim = coaction.codomain_total() / carrier_dim;
        Ok(ComoduleData {
            carrier_dim,
            coaction: coaction.reshaped(vec![coacting_dim, carrier_dim], vec![carrier_dim])?,
        })
    }

    pub fn carrier_dim(&self) -> usize {
        self.carrier_dim
    }

    pub fn coacting_dim(&self) -> usize {
        self.coaction.codomain_dims()[0]
    }

    pub fn coaction(&self) -> &LinearMap<F> {
        &self.coaction
    }

    /// The trivial coaction `x ↦ 1 ⊗ x`.
    pub fn trivial(b: &BialgebraData<F>, carrier_dim: usize) -> Self {
        let id = LinearMap::identity(b.field().clone(), vec![carrier_dim]);
        let coaction = b.unit().tensor(&id).expect("same field");
        ComoduleData::new(carrier_dim, coaction).expect("well shaped")
    }

    /// `B` coacting on itself by comultiplication.
    pub fn regular(b: &BialgebraData<F>) -> Self {
        ComoduleData::new(b.dim(), b.comult().clone()).expect("well shaped")
    }
}

/// A left `B`-comodule algebra: the `A` of a relative Hopf module category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComoduleAlgebra<F: Field> {
    pub algebra: AlgebraData<F>,
    pub coaction: LinearMap<F>,
}

impl<F: Field> ComoduleAlgebra<F> {
    pub fn new(algebra: AlgebraData<F>, coaction: LinearMap<F>) -> Result<Self, Error> {
        if coaction.field() != algebra.field() {
            return Err(Error::FieldMismatch);
        }
        if coaction.domain_total() != algebra.dim() {
            return Err(Error::DimMismatch {
                context: "comodule algebra coaction",
                expected: algebra.dim(),
                found: coaction.domain_total(),
            });
        }
        Ok(ComoduleAlgebra { algebra, coaction })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

/// A relative Hopf module candidate: left `B`-coaction and right `A`-action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelHopfModuleData<F: Field> {
    carrier_dim: usize,
    coaction: LinearMap<F>,
    right_action: LinearMap<F>,
}

impl<F: Field> RelHopfModuleData<F> {
    pub fn new(
        carrier_dim: usize,
        coaction: LinearMap<F>,
        right_action: LinearMap<F>,
    ) -> Result<Self, Error> {
        if carrier_dim == 0 {
            return Err(Error::Invalid("zero-dimensional carrier".into()));
        }
        if coaction.domain_total() != carrier_dim || coaction.codomain_total() % carrier_dim != 0 {
            return Err(Error::DimMismatch {
                context: "relative Hopf coaction",
                expected: carrier_dim,
                found: coaction.domain_total(),
            });
        }
        if right_action.codomain_total() != carrier_dim
            || right_action.domain_total() % carrier_dim != 0
        {
            return Err(Error::DimMismatch {
                context: "relative Hopf right action",
                expected: carrier_dim,
                found: right_action.codomain_total(),
            });
        }
        let b_dim = coaction.codomain_total() / carrier_dim;
        let a_dim = right_action.domain_total() / carrier_dim;
        Ok(RelHopfModuleData {
            carrier_dim,
            coaction: coaction.reshaped(vec![b_dim, carrier_dim], vec![carrier_dim])?,
            right_action: right_action.reshaped(vec![carrier_dim], vec![carrier_dim, a_dim])?,
        })
    }

    pub fn carrier_dim(&self) -> usize {
        self.carrier_dim
    }

    pub fn coaction(&self) -> &LinearMap<F> {
        &self.coaction
    }

    pub fn right_action(&self) -> &LinearMap<F> {
        &self.right_action
    }

    pub fn comodule(&self) -> ComoduleData<F> {
        ComoduleData::new(self.carrier_dim, self.coaction.clone()).expect("validated")
    }
}

fn expect_action_shape<F: Field>(b: &BialgebraData<F>, x: &ModuleData<F>) -> Result<(), Error> {
    if x.action().field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    if x.acting_dim() != b.dim() {
        return Err(Error::DimMismatch {
            context: "module over B",
            expected: b.dim(),
            found: x.acting_dim(),
        });
    }
    Ok(())
}

fn expect_coaction_shape<F: Field>(b: &BialgebraData<F>, x: &ComoduleData<F>) -> Result<(), Error> {
    if x.coaction().field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    if x.coacting_dim() != b.dim() {
        return Err(Error::DimMismatch {
            context: "comodule over B",
            expected: b.dim(),
            found: x.coacting_dim(),
        });
    }
    Ok(())
}

/// Unitality `1 · x = x` and associativity `(hh') · x = h · (h' · x)`.
pub fn check_module<F: Field>(
    b: &BialgebraData<F>,
    x: &ModuleData<F>,
) -> Result<CheckReport, Error> {
    expect_action_shape(b, x)?;
    let f = b.field().clone();
    let dx = x.carrier_dim();
    let id_x = LinearMap::identity(f.clone(), vec![dx]);
    let id_b = LinearMap::identity(f, vec![b.dim()]);
    let act = x.action();
    let mut report = CheckReport::new();
    let unital = act.compose(&b.unit().tensor(&id_x).unwrap()).unwrap();
    report.push_identity("module_unit", &unital, &id_x);
    let lhs = act.compose(&b.mult().tensor(&id_x).unwrap()).unwrap();
    let rhs = act.compose(&id_b.tensor(act).unwrap()).unwrap();
    report.push_identity("module_assoc", &lhs, &rhs);
    Ok(report)
}

/// Counitality and coassociativity of a coaction.
pub fn check_comodule<F: Field>(
    b: &BialgebraData<F>,
    x: &ComoduleData<F>,
) -> Result<CheckReport, Error> {
    expect_coaction_shape(b, x)?;
    let f = b.field().clone();
    let dx = x.carrier_dim();
    let id_x = LinearMap::identity(f.clone(), vec![dx]);
    let id_b = LinearMap::identity(f, vec![b.dim()]);
    let coact = x.coaction();
    let mut report = CheckReport::new();
    let counital = b.counit().tensor(&id_x).unwrap().compose(coact).unwrap();
    report.push_identity("comodule_counit", &counital, &id_x);
    let lhs = b.comult().tensor(&id_x).unwrap().compose(coact).unwrap();
    let rhs = id_b.tensor(coact).unwrap().compose(coact).unwrap();
    report.push_identity("comodule_coassoc", &lhs, &rhs);
    Ok(report)
}

/// `λ(1) = 1 ⊗ 1` and `λ(ab) = a_{(-1)} b_{(-1)} ⊗ a_{(0)} b_{(0)}`.
pub fn check_comodule_algebra<F: Field>(
    b: &BialgebraData<F>,
    a: &AlgebraData<F>,
    coaction: &LinearMap<F>,
) -> Result<CheckReport, Error> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    let x = ComoduleData::new(a.dim(), coaction.clone())?;
    expect_coaction_shape(b, &x)?;
    let f = b.field().clone();
    let (db, da) = (b.dim(), a.dim());
    let id_b = LinearMap::identity(f.clone(), vec![db]);
    let id_a = LinearMap::identity(f.clone(), vec![da]);
    let lam = x.coaction();
    let mut report = CheckReport::new();
    let lhs = lam.compose(a.unit()).unwrap();
    let rhs = b.unit().tensor(a.unit()).unwrap();
    report.push_identity("comodule_algebra_unit", &lhs, &rhs);
    let lhs = lam.compose(a.mult()).unwrap();
    let mid = id_b
        .tensor(&flip(f, da, db))
        .unwrap()
        .tensor(&id_a)
        .unwrap();
    let rhs = compose_chain(&[
        &b.mult().tensor(a.mult()).unwrap(),
        &mid,
        &lam.tensor(lam).unwrap(),
    ])
    .unwrap();
    report.push_identity("comodule_algebra_mult", &lhs, &rhs);
    Ok(report)
}

/// `a_{(-1)} ε(a_{(0)}) = ε(a) 1` and the comodule-coalgebra compatibility
/// `a_{(-1)} ⊗ Δ(a_{(0)}) = a_{(1)(-1)} a_{(2)(-1)} ⊗ a_{(1)(0)} ⊗ a_{(2)(0)}`.
pub fn check_comodule_coalgebra<F: Field>(
    b: &BialgebraData<F>,
    a: &CoalgebraData<F>,
    coaction: &LinearMap<F>,
) -> Result<CheckReport, Error> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    let x = ComoduleData::new(a.dim(), coaction.clone())?;
    expect_coaction_shape(b, &x)?;
    let f = b.field().clone();
    let (db, da) = (b.dim(), a.dim());
    let id_b = LinearMap::identity(f.clone(), vec![db]);
    let id_a = LinearMap::identity(f.clone(), vec![da]);
    let lam = x.coaction();
    let mut report = CheckReport::new();
    let lhs = id_b.tensor(a.counit()).unwrap().compose(lam).unwrap();
    let rhs = b.unit().compose(a.counit()).unwrap();
    report.push_identity("comodule_coalgebra_counit", &lhs, &rhs);
    let lhs = id_b.tensor(a.comult()).unwrap().compose(lam).unwrap();
    let mid = id_b
        .tensor(&flip(f, da, db))
        .unwrap()
        .tensor(&id_a)
        .unwrap();
    let rhs = compose_chain(&[
        &b.mult().tensor(&id_a).unwrap().tensor(&id_a).unwrap(),
        &mid,
        &lam.tensor(lam).unwrap(),
        a.comult(),
    ])
    .unwrap();
    report.push_identity("comodule_coalgebra_comult", &lhs, &rhs);
    Ok(report)
}

/// `h · 1 = ε(h) 1` and `h · (ab) = (h_{(1)} · a)(h_{(2)} · b)`.
pub fn check_module_algebra<F: Field>(
    b: &BialgebraData<F>,
    a: &AlgebraData<F>,
    action: &LinearMap<F>,
) -> Result<CheckReport, Error> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    let x = ModuleData::new(a.dim(), action.clone())?;
    expect_action_shape(b, &x)?;
    let f = b.field().clone();
    let (db, da) = (b.dim(), a.dim());
    let id_b = LinearMap::identity(f.clone(), vec![db]);
    let id_a = LinearMap::identity(f.clone(), vec![da]);
    let act = x.action();
    let mut report = CheckReport::new();
    let lhs = act.compose(&id_b.tensor(a.unit()).unwrap()).unwrap();
    let rhs = a.unit().compose(b.counit()).unwrap();
    report.push_identity("module_algebra_unit", &lhs, &rhs);
    let lhs = act.compose(&id_b.tensor(a.mult()).unwrap()).unwrap();
    let mid = id_b
        .tensor(&flip(f, db, da))
        .unwrap()
        .tensor(&id_a)
        .unwrap();
    let rhs = compose_chain(&[
        a.mult(),
        &act.tensor(act).unwrap(),
        &mid,
        &b.comult().tensor(&id_a).unwrap().tensor(&id_a).unwrap(),
    ])
    .unwrap();
    report.push_identity("module_algebra_mult", &lhs, &rhs);
    Ok(report)
}

/// `ε(h · a) = ε(h) ε(a)` and `Δ(h · a) = h_{(1)} · a_{(1)} ⊗ h_{(2)} · a_{(2)}`.
pub fn check_module_coalgebra<F: Field>(
    b: &BialgebraData<F>,
    a: &CoalgebraData<F>,
    action: &LinearMap<F>,
) -> Result<CheckReport, Error> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    let x = ModuleData::new(a.dim(), action.clone())?;
    expect_action_shape(b, &x)?;
    let f = b.field().clone();
    let (db, da) = (b.dim(), a.dim());
    let id_b = LinearMap::identity(f.clone(), vec![db]);
    let id_a = LinearMap::identity(f.clone(), vec![da]);
    let act = x.action();
    let mut report = CheckReport::new();
    let lhs = a.counit().compose(act).unwrap();
    let rhs = b.counit().tensor(a.counit()).unwrap();
    report.push_identity("module_coalgebra_counit", &lhs, &rhs);
    let lhs = a.comult().compose(act).unwrap();
    let mid = id_b
        .tensor(&flip(f, db, da))
        .unwrap()
        .tensor(&id_a)
        .unwrap();
    let rhs = compose_chain(&[
        &act.tensor(act).unwrap(),
        &mid,
        &b.comult().tensor(a.comult()).unwrap(),
    ])
    .unwrap();
    report.push_identity("module_coalgebra_comult", &lhs, &rhs);
    Ok(report)
}

/// The four equivariant-structure flavors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquivariantFlavor {
    ComoduleCoalgebra,
    ComoduleAlgebra,
    ModuleAlgebra,
    ModuleCoalgebra,
}

/// Dispatch over [`EquivariantFlavor`]. The algebra argument is required for
/// the algebra flavors, the coalgebra argument for the coalgebra flavors; the
/// final map is the coaction (comodule flavors) or action (module flavors).
pub fn check_equivariant_structure<F: Field>(
    flavor: EquivariantFlavor,
    b: &BialgebraData<F>,
    a_algebra: Option<&AlgebraData<F>>,
    a_coalgebra: Option<&CoalgebraData<F>>,
    act_or_coact: &LinearMap<F>,
) -> Result<CheckReport, Error> {
    let need_alg = || a_algebra.ok_or(Error::Invalid("flavor needs an algebra structure".into()));
    let need_coalg =
        || a_coalgebra.ok_or(Error::Invalid("flavor needs a coalgebra structure".into()));
    match flavor {
        EquivariantFlavor::ComoduleAlgebra => check_comodule_algebra(b, need_alg()?, act_or_coact),
        EquivariantFlavor::ComoduleCoalgebra => {
            check_comodule_coalgebra(b, need_coalg()?, act_or_coact)
        }
        EquivariantFlavor::ModuleAlgebra => check_module_algebra(b, need_alg()?, act_or_coact),
        EquivariantFlavor::ModuleCoalgebra => {
            check_module_coalgebra(b, need_coalg()?, act_or_coact)
        }
    }
}

/// The Yetter-Drinfeld compatibility
/// `(h_{(1)} · x)_{(-1)} h_{(2)} ⊗ (h_{(1)} · x)_{(0)}
///  = h_{(1)} x_{(-1)} ⊗ h_{(2)} · x_{(0)}`
/// as an identity of maps `B ⊗ X → B ⊗ X`.
pub fn check_yetter_drinfeld<F: Field>(
    b: &BialgebraData<F>,
    module: &ModuleData<F>,
    comodule: &ComoduleData<F>,
) -> Result<CheckReport, Error> {
    expect_action_shape(b, module)?;
    expect_coaction_shape(b, comodule)?;
    if module.carrier_dim() != comodule.carrier_dim() {
        return Err(Error::DimMismatch {
            context: "Yetter-Drinfeld carrier",
            expected: module.carrier_dim(),
            found: comodule.carrier_dim(),
        });
    }
    let f = b.field().clone();
    let (db, dx) = (b.dim(), module.carrier_dim());
    let id_b = LinearMap::identity(f.clone(), vec![db]);
    let id_x = LinearMap::identity(f.clone(), vec![dx]);
    let (act, coact) = (module.action(), comodule.coaction());
    let lhs = compose_chain(&[
        &b.mult().tensor(&id_x).unwrap(),
        &id_b.tensor(&flip(f.clone(), dx, db)).unwrap(),
        &coact.tensor(&id_b).unwrap(),
        &act.tensor(&id_b).unwrap(),
        &id_b.tensor(&flip(f.clone(), db, dx)).unwrap(),
        &b.comult().tensor(&id_x).unwrap(),
    ])
    .unwrap();
    let mid = id_b
        .tensor(&flip(f, db, db))
        .unwrap()
        .tensor(&id_x)
        .unwrap();
    let rhs = compose_chain(&[
        &b.mult().tensor(act).unwrap(),
        &mid,
        &b.comult().tensor(coact).unwrap(),
    ])
    .unwrap();
    let mut report = CheckReport::new();
    report.push_identity("yd_compatibility", &lhs, &rhs);
    Ok(report)
}

/// Full membership check for the relative Hopf module category: comodule
/// axioms, right-module axioms over `A`, and the compatibility
/// `λ(x · a) = x_{(-1)} a_{(-1)} ⊗ x_{(0)} · a_{(0)}`.
pub fn check_relative_hopf<F: Field>(
    b: &BialgebraData<F>,
    a: &ComoduleAlgebra<F>,
    x: &RelHopfModuleData<F>,
) -> Result<CheckReport, Error> {
    if a.algebra.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    let comodule = x.comodule();
    expect_coaction_shape(b, &comodule)?;
    let da = a.dim();
    if x.right_action().domain_total() != x.carrier_dim() * da {
        return Err(Error::DimMismatch {
            context: "relative Hopf right action over A",
            expected: x.carrier_dim() * da,
            found: x.right_action().domain_total(),
        });
    }
    if a.coaction.codomain_total() != b.dim() * da {
        return Err(Error::DimMismatch {
            context: "comodule algebra coaction over B",
            expected: b.dim() * da,
            found: a.coaction.codomain_total(),
        });
    }
    let f = b.field().clone();
    let (db, dx) = (b.dim(), x.carrier_dim());
    let id_x = LinearMap::identity(f.clone(), vec![dx]);
    let id_b = LinearMap::identity(f.clone(), vec![db]);
    let id_a = LinearMap::identity(f.clone(), vec![da]);
    let ract = x.right_action();
    let coact = x.coaction();

    let mut report = CheckReport::new();
    report.absorb("relhopf_", check_comodule(b, &comodule)?);

    let unital = ract
        .compose(&id_x.tensor(a.algebra.unit()).unwrap())
        .unwrap();
    report.push_identity("relhopf_module_unit", &unital, &id_x);
    let lhs = ract.compose(&ract.tensor(&id_a).unwrap()).unwrap();
    let rhs = ract
        .compose(&id_x.tensor(a.algebra.mult()).unwrap())
        .unwrap();
    report.push_identity("relhopf_module_assoc", &lhs, &rhs);

    let lhs = coact.compose(ract).unwrap();
    let mid = id_b
        .tensor(&flip(f, dx, db))
        .unwrap()
        .tensor(&id_a)
        .unwrap();
    let rhs = compose_chain(&[
        &b.mult().tensor(ract).unwrap(),
        &mid,
        &coact.tensor(&a.coaction).unwrap(),
    ])
    .unwrap();
    report.push_identity("relhopf_compat", &lhs, &rhs);
    Ok(report)
}

/// Block direct sum of two modules over the same algebra.
pub fn module_direct_sum<F: Field>(
    x: &ModuleData<F>,
    y: &ModuleData<F>,
) -> Result<ModuleData<F>, Error> {
    if x.acting_dim() != y.acting_dim() {
        return Err(Error::DimMismatch {
            context: "direct sum acting algebra",
            expected: x.acting_dim(),
            found: y.acting_dim(),
        });
    }
    let f = x.action().field().clone();
    let db = x.acting_dim();
    let (dx, dy) = (x.carrier_dim(), y.carrier_dim());
    let d = dx + dy;
    let mut triplets = Vec::new();
    for hb in 0..db {
        for c in 0..dx {
            for (r, v) in x.action().column(hb * dx + c) {
                triplets.push((*r, hb * d + c, v.clone()));
            }
        }
        for c in 0..dy {
            for (r, v) in y.action().column(hb * dy + c) {
                triplets.push((dx + *r, hb * d + dx + c, v.clone()));
            }
        }
    }
    let action = LinearMap::from_triplets(f, vec![d], vec![db, d], triplets)?;
    ModuleData::new(d, action)
}

/// Block direct sum of two comodules over the same bialgebra.
pub fn comodule_direct_sum<F: Field>(
    x: &ComoduleData<F>,
    y: &ComoduleData<F>,
) -> Result<ComoduleData<F>, Error> {
    if x.coacting_dim() != y.coacting_dim() {
        return Err(Error::DimMismatch {
            context: "direct sum coacting bialgebra",
            expected: x.coacting_dim(),
            found: y.coacting_dim(),
        });
    }
    let f = x.coaction().field().clone();
    let db = x.coacting_dim();
    let (dx, dy) = (x.carrier_dim(), y.carrier_dim());
    let d = dx + dy;
    let mut triplets = Vec::new();
    for c in 0..dx {
        for (r, v) in x.coaction().column(c) {
            let (rb, rx) = (r / dx, r % dx);
            triplets.push((rb * d + rx, c, v.clone()));
        }
    }
    for c in 0..dy {
        for (r, v) in y.coaction().column(c) {
            let (rb, ry) = (r / dy, r % dy);
            triplets.push((rb * d + dx + ry, dx + c, v.clone()));
        }
    }
    let coaction = LinearMap::from_triplets(f, vec![db, d], vec![d], triplets)?;
    ComoduleData::new(d, coaction)
}
