//! Single-entry structure-constant mutations, used by the sensitivity and
//! agreement suites: bump one matrix entry by a small amount and re-run the
//! checkers.

use crate::error::Error;
use crate::field::Field;
use crate::hopfcore::{AlgebraData, BialgebraData, CoalgebraData, HopfData};
use crate::monoidal::MonoidalInputDatum;
use crate::tensorlin::LinearMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HopfComponent {
    Mult,
    Unit,
    Comult,
    Counit,
    Antipode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HopfSite {
    pub component: HopfComponent,
    pub row: usize,
    pub col: usize,
}

fn bump<F: Field>(map: &LinearMap<F>, row: usize, col: usize, delta: i64) -> LinearMap<F> {
    let f = map.field().clone();
    let unit = LinearMap::from_triplets(
        f.clone(),
        map.codomain_dims().to_vec(),
        map.domain_dims().to_vec(),
        [(row, col, f.from_int(delta))],
    )
    .expect("site within shape");
    map.add(&unit).expect("same shape")
}

/// All entry positions of the five structure maps of `h`.
pub fn hopf_sites<F: Field>(h: &HopfData<F>) -> Vec<HopfSite> {
    let d = h.dim();
    let mut sites = Vec::new();
    let mut push = |component, rows: usize, cols: usize| {
        for row in 0..rows {
            for col in 0..cols {
                sites.push(HopfSite {
                    component,
                    row,
                    col,
                });
            }
        }
    };
    push(HopfComponent::Mult, d, d * d);
    push(HopfComponent::Unit, d, 1);
    push(HopfComponent::Comult, d * d, d);
    push(HopfComponent::Counit, 1, d);
    push(HopfComponent::Antipode, d, d);
    sites
}

/// `h` with one structure constant shifted by `delta`.
pub fn mutate_hopf<F: Field>(h: &HopfData<F>, site: HopfSite, delta: i64) -> HopfData<F> {
    let mut mult = h.mult().clone();
    let mut unit = h.unit().clone();
    let mut comult = h.comult().clone();
    let mut counit = h.counit().clone();
    let mut antipode = h.antipode().clone();
    match site.component {
        HopfComponent::Mult => mult = bump(&mult, site.row, site.col, delta),
        HopfComponent::Unit => unit = bump(&unit, site.row, site.col, delta),
        HopfComponent::Comult => comult = bump(&comult, site.row, site.col, delta),
        HopfComponent::Counit => counit = bump(&counit, site.row, site.col, delta),
        HopfComponent::Antipode => antipode = bump(&antipode, site.row, site.col, delta),
    }
    HopfData::new(
        BialgebraData::new(
            AlgebraData::new(mult, unit).expect("shapes unchanged"),
            CoalgebraData::new(comult, counit).expect("shapes unchanged"),
        )
        .expect("shapes unchanged"),
        antipode,
    )
    .expect("shapes unchanged")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DatumComponent {
    AMult,
    AUnit,
    AComult,
    ACounit,
    ACoaction,
    AAction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DatumSite {
    pub component: DatumComponent,
    pub row: usize,
    pub col: usize,
}

/// All entry positions of the `A`-side structure maps of a datum. `B` is
/// left alone: in this artifact `B` is always a fixed, valid bialgebra and
/// the interesting mutations live on `A`.
pub fn datum_sites<F: Field>(datum: &MonoidalInputDatum<F>) -> Vec<DatumSite> {
    let (db, da) = (datum.b().dim(), datum.a_dim());
    let mut sites = Vec::new();
    let mut push = |component, rows: usize, cols: usize| {
        for row in 0..rows {
            for col in 0..cols {
                sites.push(DatumSite {
                    component,
                    row,
                    col,
                });
            }
        }
    };
    push(DatumComponent::AMult, da, da * da);
    push(DatumComponent::AUnit, da, 1);
    push(DatumComponent::AComult, da * da, da);
    push(DatumComponent::ACounit, 1, da);
    push(DatumComponent::ACoaction, db * da, da);
    push(DatumComponent::AAction, da, db * da);
    sites
}

/// A datum with one `A`-side entry shifted by `delta`. Returns an error when
/// the mutation violates the datum's construction invariants; such
/// mutations are "unusable" for the agreement suite and get skipped.
pub fn mutate_datum<F: Field>(
    datum: &MonoidalInputDatum<F>,
    site: DatumSite,
    delta: i64,
) -> Result<MonoidalInputDatum<F>, Error> {
    let mut a_mult = datum.a_algebra().mult().clone();
    let mut a_unit = datum.a_algebra().unit().clone();
    let mut a_comult = datum.a_coalgebra().comult().clone();
    let mut a_counit = datum.a_coalgebra().counit().clone();
    let mut a_coaction = datum.a_coaction().clone();
    let mut a_action = datum.a_action().clone();
    match site.component {
        DatumComponent::AMult => a_mult = bump(&a_mult, site.row, site.col, delta),
        DatumComponent::AUnit => a_unit = bump(&a_unit, site.row, site.col, delta),
        DatumComponent::AComult => a_comult = bump(&a_comult, site.row, site.col, delta),
        DatumComponent::ACounit => a_counit = bump(&a_counit, site.row, site.col, delta),
        DatumComponent::ACoaction => a_coaction = bump(&a_coaction, site.row, site.col, delta),
        DatumComponent::AAction => a_action = bump(&a_action, site.row, site.col, delta),
    }
    MonoidalInputDatum::try_new(
        datum.b().clone(),
        AlgebraData::new(a_mult, a_unit)?,
        CoalgebraData::new(a_comult, a_counit)?,
        a_coaction,
        a_action,
    )
}
