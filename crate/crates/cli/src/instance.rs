//! Structure-constant instance files: UTF-8 JSON with an explicit field
//! specification, canonical scalar strings, and dense row-major arrays.
//!
//! Conventions (indices are authoritative, basis labels documentation only):
//! `mult[i][j][k]` is the coefficient of `e_k` in `e_i e_j`;
//! `comult[i][j][k]` the coefficient of `e_j ⊗ e_k` in `Δ e_i`;
//! `unit[i]`, `counit[i]`; `antipode[i][j]` the coefficient of `e_j` in
//! `S e_i`; `r_matrix[i][j]` the coefficient of `e_i ⊗ e_j`; `sigma[i][j]` is
//! `σ(e_i, e_j)`. A coaction over an external bialgebra `B` is
//! `coaction[i][j][k]` = coefficient of `b_j ⊗ e_k` in `λ(e_i)`; an action of
//! `B` is `action[i][j][k]` = coefficient of `e_k` in `b_i · e_j`. Module
//! blocks use the same conventions with `right_action[i][j][k]` = coefficient
//! of `x_k` in `x_i · a_j`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use relhopf_core::field::{Field, FieldSpec, PrimeField, Rationals};
use relhopf_core::hopfcore::{
    AlgebraData, BialgebraData, CoalgebraData, HopfData, RMatrix, SigmaForm,
};
use relhopf_core::reptheory::{ComoduleAlgebra, RelHopfModuleData};
use relhopf_core::tensorlin::LinearMap;
use relhopf_core::LinearMap as CoreMap;

/// An input problem: anything wrong with a file, its schema, or its shapes.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

impl From<relhopf_core::Error> for InputError {
    fn from(e: relhopf_core::Error) -> Self {
        InputError(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, InputError>;

type Arr1 = Vec<String>;
type Arr2 = Vec<Vec<String>>;
type Arr3 = Vec<Vec<Vec<String>>>;
type Lifted3<F> = Vec<Vec<Vec<<F as Field>::Elem>>>;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleBlockFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coaction: Option<Arr3>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right_action: Option<Arr3>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub action: Option<Arr3>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub field: String,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mult: Option<Arr3>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit: Option<Arr1>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comult: Option<Arr3>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counit: Option<Arr1>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Arr2>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_matrix: Option<Arr2>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Arr2>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coaction: Option<Arr3>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub action: Option<Arr3>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modules: Option<Vec<ModuleBlockFile>>,
}

pub fn parse_field_spec(text: &str) -> Result<FieldSpec> {
    let t = text.trim();
    if t == "rationals" {
        return Ok(FieldSpec::Rationals);
    }
    if let Some(rest) = t.strip_prefix("prime-field") {
        let p: u64 = rest
            .trim()
            .parse()
            .map_err(|_| InputError(format!("field: cannot parse modulus in `{text}`")))?;
        return Ok(FieldSpec::PrimeField(p));
    }
    Err(InputError(format!(
        "field: expected `rationals` or `prime-field p`, found `{text}`"
    )))
}

/// A typed instance over a concrete field.
#[derive(Debug, Clone)]
pub struct Instance<F: Field> {
    pub field: F,
    pub dim: usize,
    pub basis: Option<Vec<String>>,
    pub mult: Option<LinearMap<F>>,
    pub unit: Option<LinearMap<F>>,
    pub comult: Option<LinearMap<F>>,
    pub counit: Option<LinearMap<F>>,
    pub antipode: Option<LinearMap<F>>,
    pub r_matrix: Option<RMatrix<F>>,
    pub sigma: Option<SigmaForm<F>>,
    pub coaction: Option<LinearMap<F>>,
    pub action: Option<LinearMap<F>>,
    pub modules: Vec<ModuleInstance<F>>,
}

#[derive(Debug, Clone)]
pub struct ModuleInstance<F: Field> {
    pub name: Option<String>,
    pub dim: usize,
    pub coaction: Option<LinearMap<F>>,
    pub right_action: Option<LinearMap<F>>,
    pub action: Option<LinearMap<F>>,
}

/// A module block resolved to typed relative-Hopf data, with its label.
pub type NamedModule<F> = (Option<String>, RelHopfModuleData<F>);

/// An instance over whichever field the file declares.
#[derive(Debug, Clone)]
pub enum AnyInstance {
    Rational(Instance<Rationals>),
    Prime(Instance<PrimeField>),
}

/// Run a closure against the typed instance, whichever field it lives over.
#[macro_export]
macro_rules! with_instance {
    ($any:expr, |$inst:ident| $body:expr) => {
        match $any {
            $crate::instance::AnyInstance::Rational($inst) => $body,
            $crate::instance::AnyInstance::Prime($inst) => $body,
        }
    };
}

fn parse_scalar<F: Field>(field: &F, path: &str, text: &str) -> Result<F::Elem> {
    field
        .parse(text)
        .map_err(|e| InputError(format!("{path}: {e}")))
}

fn lift_vec<F: Field>(field: &F, name: &str, arr: &Arr1, len: usize) -> Result<Vec<F::Elem>> {
    if arr.len() != len {
        return Err(InputError(format!(
            "{name}: expected {len} entries, found {}",
            arr.len()
        )));
    }
    arr.iter()
        .enumerate()
        .map(|(i, s)| parse_scalar(field, &format!("{name}[{i}]"), s))
        .collect()
}

fn lift_arr2<F: Field>(
    field: &F,
    name: &str,
    arr: &Arr2,
    rows: usize,
    cols: usize,
) -> Result<Vec<Vec<F::Elem>>> {
    if arr.len() != rows {
        return Err(InputError(format!(
            "{name}: expected {rows} rows, found {}",
            arr.len()
        )));
    }
    arr.iter()
        .enumerate()
        .map(|(i, row)| lift_vec(field, &format!("{name}[{i}]"), row, cols))
        .collect()
}

fn lift_arr3<F: Field>(
    field: &F,
    name: &str,
    arr: &Arr3,
    d1: usize,
    d2: Option<usize>,
    d3: usize,
) -> Result<(usize, Lifted3<F>)> {
    if arr.len() != d1 {
        return Err(InputError(format!(
            "{name}: expected {d1} outer entries, found {}",
            arr.len()
        )));
    }
    let mid = match d2 {
        Some(d) => d,
        None => arr
            .first()
            .map(|row| row.len())
            .ok_or(InputError(format!("{name}: empty array")))?,
    };
    let mut out = Vec::with_capacity(d1);
    for (i, row) in arr.iter().enumerate() {
        out.push(lift_arr2(field, &format!("{name}[{i}]"), row, mid, d3)?);
    }
    Ok((mid, out))
}

fn lift_instance<F: Field>(field: F, raw: &InstanceFile) -> Result<Instance<F>> {
    let d = raw.dim;
    if d == 0 {
        return Err(InputError("dim: must be positive".into()));
    }
    if let Some(basis) = &raw.basis {
        if basis.len() != d {
            return Err(InputError(format!(
                "basis: expected {d} labels, found {}",
                basis.len()
            )));
        }
    }
    let mut out = Instance {
        field: field.clone(),
        dim: d,
        basis: raw.basis.clone(),
        mult: None,
        unit: None,
        comult: None,
        counit: None,
        antipode: None,
        r_matrix: None,
        sigma: None,
        coaction: None,
        action: None,
        modules: Vec::new(),
    };
    if let Some(arr) = &raw.mult {
        let (_, table) = lift_arr3(&field, "mult", arr, d, Some(d), d)?;
        let mut triplets = Vec::new();
        for (i, rows) in table.iter().enumerate() {
            for (j, row) in rows.iter().enumerate() {
                for (k, v) in row.iter().enumerate() {
                    if !field.is_zero(v) {
                        triplets.push((k, i * d + j, v.clone()));
                    }
                }
            }
        }
        out.mult = Some(LinearMap::from_triplets(
            field.clone(),
            vec![d],
            vec![d, d],
            triplets,
        )?);
    }
    if let Some(arr) = &raw.unit {
        let col = lift_vec(&field, "unit", arr, d)?;
        let triplets = col
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !field.is_zero(v))
            .map(|(i, v)| (i, 0, v));
        out.unit = Some(LinearMap::from_triplets(
            field.clone(),
            vec![d],
            vec![],
            triplets,
        )?);
    }
    if let Some(arr) = &raw.comult {
        let (_, table) = lift_arr3(&field, "comult", arr, d, Some(d), d)?;
        let mut triplets = Vec::new();
        for (i, rows) in table.iter().enumerate() {
            for (j, row) in rows.iter().enumerate() {
                for (k, v) in row.iter().enumerate() {
                    if !field.is_zero(v) {
                        triplets.push((j * d + k, i, v.clone()));
                    }
                }
            }
        }
        out.comult = Some(LinearMap::from_triplets(
            field.clone(),
            vec![d, d],
            vec![d],
            triplets,
        )?);
    }
    if let Some(arr) = &raw.counit {
        let row = lift_vec(&field, "counit", arr, d)?;
        let triplets = row
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !field.is_zero(v))
            .map(|(i, v)| (0, i, v));
        out.counit = Some(LinearMap::from_triplets(
            field.clone(),
            vec![],
            vec![d],
            triplets,
        )?);
    }
    if let Some(arr) = &raw.antipode {
        let table = lift_arr2(&field, "antipode", arr, d, d)?;
        let mut triplets = Vec::new();
        for (i, row) in table.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !field.is_zero(v) {
                    triplets.push((j, i, v.clone()));
                }
            }
        }
        out.antipode = Some(LinearMap::from_triplets(
            field.clone(),
            vec![d],
            vec![d],
            triplets,
        )?);
    }
    if let Some(arr) = &raw.r_matrix {
        let table = lift_arr2(&field, "r_matrix", arr, d, d)?;
        out.r_matrix = Some(RMatrix::from_coeffs(field.clone(), &table)?);
    }
    if let Some(arr) = &raw.sigma {
        let table = lift_arr2(&field, "sigma", arr, d, d)?;
        out.sigma = Some(SigmaForm::from_coeffs(field.clone(), &table)?);
    }
    if let Some(arr) = &raw.coaction {
        let (db, table) = lift_arr3(&field, "coaction", arr, d, None, d)?;
        let mut triplets = Vec::new();
        for (i, rows) in table.iter().enumerate() {
            for (j, row) in rows.iter().enumerate() {
                for (k, v) in row.iter().enumerate() {
                    if !field.is_zero(v) {
                        triplets.push((j * d + k, i, v.clone()));
                    }
                }
            }
        }
        out.coaction = Some(LinearMap::from_triplets(
            field.clone(),
            vec![db, d],
            vec![d],
            triplets,
        )?);
    }
    if let Some(arr) = &raw.action {
        let db = arr.len();
        let (_, table) = lift_arr3(&field, "action", arr, db, Some(d), d)?;
        let mut triplets = Vec::new();
        for (i, rows) in table.iter().enumerate() {
            for (j, row) in rows.iter().enumerate() {
                for (k, v) in row.iter().enumerate() {
                    if !field.is_zero(v) {
                        triplets.push((k, i * d + j, v.clone()));
                    }
                }
            }
        }
        out.action = Some(LinearMap::from_triplets(
            field.clone(),
            vec![d],
            vec![db, d],
            triplets,
        )?);
    }
    for (m, block) in raw.modules.iter().flatten().enumerate() {
        let md = block.dim;
        if md == 0 {
            return Err(InputError(format!("modules[{m}].dim: must be positive")));
        }
        let mut module = ModuleInstance {
            name: block.name.clone(),
            dim: md,
            coaction: None,
            right_action: None,
            action: None,
        };
        if let Some(arr) = &block.coaction {
            let (db, table) =
                lift_arr3(&field, &format!("modules[{m}].coaction"), arr, md, None, md)?;
            let mut triplets = Vec::new();
            for (i, rows) in table.iter().enumerate() {
                for (j, row) in rows.iter().enumerate() {
                    for (k, v) in row.iter().enumerate() {
                        if !field.is_zero(v) {
                            triplets.push((j * md + k, i, v.clone()));
                        }
                    }
                }
            }
            module.coaction = Some(LinearMap::from_triplets(
                field.clone(),
                vec![db, md],
                vec![md],
                triplets,
            )?);
        }
        if let Some(arr) = &block.right_action {
            let (da, table) = lift_arr3(
                &field,
                &format!("modules[{m}].right_action"),
                arr,
                md,
                None,
                md,
            )?;
            let mut triplets = Vec::new();
            for (i, rows) in table.iter().enumerate() {
                for (j, row) in rows.iter().enumerate() {
                    for (k, v) in row.iter().enumerate() {
                        if !field.is_zero(v) {
                            triplets.push((k, i * da + j, v.clone()));
                        }
                    }
                }
            }
            module.right_action = Some(LinearMap::from_triplets(
                field.clone(),
                vec![md],
                vec![md, da],
                triplets,
            )?);
        }
        if let Some(arr) = &block.action {
            let db = arr.len();
            let (_, table) = lift_arr3(
                &field,
                &format!("modules[{m}].action"),
                arr,
                db,
                Some(md),
                md,
            )?;
            let mut triplets = Vec::new();
            for (i, rows) in table.iter().enumerate() {
                for (j, row) in rows.iter().enumerate() {
                    for (k, v) in row.iter().enumerate() {
                        if !field.is_zero(v) {
                            triplets.push((k, i * md + j, v.clone()));
                        }
                    }
                }
            }
            module.action = Some(LinearMap::from_triplets(
                field.clone(),
                vec![md],
                vec![db, md],
                triplets,
            )?);
        }
        out.modules.push(module);
    }
    Ok(out)
}

pub fn from_file(raw: &InstanceFile) -> Result<AnyInstance> {
    match parse_field_spec(&raw.field)? {
        FieldSpec::Rationals => Ok(AnyInstance::Rational(lift_instance(Rationals, raw)?)),
        FieldSpec::PrimeField(p) => {
            let field = PrimeField::new(p).map_err(|e| InputError(format!("field: {e}")))?;
            Ok(AnyInstance::Prime(lift_instance(field, raw)?))
        }
    }
}

pub fn load(path: &Path) -> Result<AnyInstance> {
    let text =
        fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let raw: InstanceFile =
        serde_json::from_str(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    from_file(&raw).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

/// Canonical serialization: sorted keys (serde_json value maps are ordered),
/// canonical scalar strings, two-space indentation, trailing newline. Saving
/// twice yields byte-identical files.
pub fn render(file: &InstanceFile) -> String {
    let value = serde_json::to_value(file).expect("schema serializes");
    let mut text = serde_json::to_string_pretty(&value).expect("value renders");
    text.push('\n');
    text
}

pub fn save(file: &InstanceFile, path: &Path) -> Result<()> {
    fs::write(path, render(file)).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn dump_vec<F: Field>(field: &F, map: &CoreMap<F>, len: usize, as_row: bool) -> Arr1 {
    (0..len)
        .map(|i| {
            let v = if as_row {
                map.entry(0, i)
            } else {
                map.entry(i, 0)
            };
            field.render(&v)
        })
        .collect()
}

fn dump_mult<F: Field>(field: &F, map: &CoreMap<F>, d: usize) -> Arr3 {
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    (0..d)
                        .map(|k| field.render(&map.entry(k, i * d + j)))
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn dump_comult<F: Field>(field: &F, map: &CoreMap<F>, d: usize) -> Arr3 {
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    (0..d)
                        .map(|k| field.render(&map.entry(j * d + k, i)))
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn dump_coaction<F: Field>(field: &F, map: &CoreMap<F>, db: usize, d: usize) -> Arr3 {
    (0..d)
        .map(|i| {
            (0..db)
                .map(|j| {
                    (0..d)
                        .map(|k| field.render(&map.entry(j * d + k, i)))
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn dump_action<F: Field>(field: &F, map: &CoreMap<F>, db: usize, d: usize) -> Arr3 {
    (0..db)
        .map(|i| {
            (0..d)
                .map(|j| {
                    (0..d)
                        .map(|k| field.render(&map.entry(k, i * d + j)))
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn dump_square<F: Field>(field: &F, map: &CoreMap<F>, d: usize, transposed: bool) -> Arr2 {
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let v = if transposed {
                        map.entry(j, i)
                    } else {
                        map.entry(i, j)
                    };
                    field.render(&v)
                })
                .collect()
        })
        .collect()
}

/// Assemble a raw file from structure pieces of a Hopf-algebra-style carrier.
pub struct FileBuilder<F: Field> {
    pub field: F,
    pub dim: usize,
    pub basis: Option<Vec<String>>,
    file: InstanceFile,
}

impl<F: Field> FileBuilder<F> {
    pub fn new(field: F, dim: usize, basis: Option<Vec<String>>) -> Self {
        let file = InstanceFile {
            field: field.spec().to_string(),
            dim,
            basis: basis.clone(),
            mult: None,
            unit: None,
            comult: None,
            counit: None,
            antipode: None,
            r_matrix: None,
            sigma: None,
            coaction: None,
            action: None,
            modules: None,
        };
        FileBuilder {
            field,
            dim,
            basis,
            file,
        }
    }

    pub fn bialgebra(mut self, b: &BialgebraData<F>) -> Self {
        let d = self.dim;
        self.file.mult = Some(dump_mult(&self.field, b.mult(), d));
        self.file.unit = Some(dump_vec(&self.field, b.unit(), d, false));
        self.file.comult = Some(dump_comult(&self.field, b.comult(), d));
        self.file.counit = Some(dump_vec(&self.field, b.counit(), d, true));
        self
    }

    pub fn hopf(self, h: &HopfData<F>) -> Self {
        let d = self.dim;
        let field = self.field.clone();
        let mut out = self.bialgebra(h.bialgebra());
        out.file.antipode = Some(dump_square(&field, h.antipode(), d, true));
        out
    }

    pub fn r_matrix(mut self, r: &RMatrix<F>) -> Self {
        let d = self.dim;
        self.file.r_matrix = Some(
            (0..d)
                .map(|i| (0..d).map(|j| self.field.render(&r.coeff(i, j))).collect())
                .collect(),
        );
        self
    }

    pub fn sigma(mut self, s: &SigmaForm<F>) -> Self {
        let d = self.dim;
        self.file.sigma = Some(
            (0..d)
                .map(|i| (0..d).map(|j| self.field.render(&s.coeff(i, j))).collect())
                .collect(),
        );
        self
    }

    pub fn coaction(mut self, db: usize, map: &CoreMap<F>) -> Self {
        self.file.coaction = Some(dump_coaction(&self.field, map, db, self.dim));
        self
    }

    pub fn action(mut self, db: usize, map: &CoreMap<F>) -> Self {
        self.file.action = Some(dump_action(&self.field, map, db, self.dim));
        self
    }

    pub fn module(
        mut self,
        name: Option<String>,
        db: usize,
        da: usize,
        m: &RelHopfModuleData<F>,
    ) -> Self {
        let md = m.carrier_dim();
        let block = ModuleBlockFile {
            name,
            dim: md,
            coaction: Some(
                (0..md)
                    .map(|i| {
                        (0..db)
                            .map(|j| {
                                (0..md)
                                    .map(|k| self.field.render(&m.coaction().entry(j * md + k, i)))
                                    .collect()
                            })
                            .collect()
                    })
                    .collect(),
            ),
            right_action: Some(
                (0..md)
                    .map(|i| {
                        (0..da)
                            .map(|j| {
                                (0..md)
                                    .map(|k| {
                                        self.field.render(&m.right_action().entry(k, i * da + j))
                                    })
                                    .collect()
                            })
                            .collect()
                    })
                    .collect(),
            ),
            action: None,
        };
        self.file.modules.get_or_insert_with(Vec::new).push(block);
        self
    }

    pub fn finish(self) -> InstanceFile {
        self.file
    }
}

impl<F: Field> Instance<F> {
    fn require<'a, T>(&self, part: &'a Option<T>, name: &str) -> Result<&'a T> {
        part.as_ref()
            .ok_or_else(|| InputError(format!("missing `{name}` structure constants")))
    }

    pub fn algebra(&self) -> Result<AlgebraData<F>> {
        Ok(AlgebraData::new(
            self.require(&self.mult, "mult")?.clone(),
            self.require(&self.unit, "unit")?.clone(),
        )?)
    }

    pub fn coalgebra(&self) -> Result<CoalgebraData<F>> {
        Ok(CoalgebraData::new(
            self.require(&self.comult, "comult")?.clone(),
            self.require(&self.counit, "counit")?.clone(),
        )?)
    }

    pub fn bialgebra(&self) -> Result<BialgebraData<F>> {
        Ok(BialgebraData::new(self.algebra()?, self.coalgebra()?)?)
    }

    pub fn hopf(&self) -> Result<HopfData<F>> {
        Ok(HopfData::new(
            self.bialgebra()?,
            self.require(&self.antipode, "antipode")?.clone(),
        )?)
    }

    pub fn r_matrix(&self) -> Result<&RMatrix<F>> {
        self.require(&self.r_matrix, "r_matrix")
    }

    pub fn sigma(&self) -> Result<&SigmaForm<F>> {
        self.require(&self.sigma, "sigma")
    }

    pub fn coaction(&self) -> Result<&LinearMap<F>> {
        self.require(&self.coaction, "coaction")
    }

    pub fn action(&self) -> Result<&LinearMap<F>> {
        self.require(&self.action, "action")
    }

    pub fn comodule_algebra(&self) -> Result<ComoduleAlgebra<F>> {
        Ok(ComoduleAlgebra::new(
            self.algebra()?,
            self.coaction()?.clone(),
        )?)
    }

    /// Modules as relative Hopf module data (coaction + right action).
    pub fn rel_hopf_modules(&self) -> Result<Vec<NamedModule<F>>> {
        let mut out = Vec::new();
        for (i, m) in self.modules.iter().enumerate() {
            let coaction = m
                .coaction
                .clone()
                .ok_or_else(|| InputError(format!("modules[{i}]: missing coaction")))?;
            let right_action = m
                .right_action
                .clone()
                .ok_or_else(|| InputError(format!("modules[{i}]: missing right_action")))?;
            out.push((
                m.name.clone(),
                RelHopfModuleData::new(m.dim, coaction, right_action)?,
            ));
        }
        Ok(out)
    }
}
