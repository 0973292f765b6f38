//! Command implementations, generic over the scalar field, plus the report
//! rendering shared by all subcommands.

use std::path::{Path, PathBuf};

use relhopf_core::field::Field;
use relhopf_core::hopfcore::{
    check_algebra, check_bialgebra, check_coalgebra, check_coquasitriangular, check_hopf,
    check_quasitriangular,
};
use relhopf_core::monoidal::{
    canonical_family, check_monoidal_conditions, check_theorem_2_1, check_trivial_action_doi_hopf,
    long_dimodule_suite, yd_identification_suite, CheckMode, MonoidalInputDatum,
};
use relhopf_core::morphdsl::{self, roles, Environment};
use relhopf_core::report::CheckReport;
use relhopf_core::reptheory::{
    check_comodule, check_module, check_relative_hopf, check_yetter_drinfeld, ComoduleData,
    ModuleData,
};
use relhopf_core::transmute::{enveloping_braided_group, function_braided_group, Transmuted};

use crate::instance::{InputError, Instance, Result};

/// What a subcommand produced: labeled reports, headline facts, and the
/// overall verdict that decides the exit code.
#[derive(Debug, Default)]
pub struct Outcome {
    pub command: String,
    pub pass: bool,
    pub sections: Vec<(String, CheckReport)>,
    pub facts: Vec<(String, String)>,
    pub skipped: Vec<String>,
}

impl Outcome {
    pub fn new(command: impl Into<String>) -> Self {
        Outcome {
            command: command.into(),
            pass: true,
            sections: Vec::new(),
            facts: Vec::new(),
            skipped: Vec::new(),
        }
    }

    pub fn section(&mut self, title: impl Into<String>, report: CheckReport) {
        self.pass &= report.passed();
        self.sections.push((title.into(), report));
    }

    pub fn fact(&mut self, key: impl Into<String>, value: impl ToString) {
        self.facts.push((key.into(), value.to_string()));
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("== {} ==\n", self.command));
        for (key, value) in &self.facts {
            out.push_str(&format!("{key}: {value}\n"));
        }
        for (title, report) in &self.sections {
            out.push_str(&format!("-- {title} --\n"));
            out.push_str(&report.to_string());
        }
        if !self.skipped.is_empty() {
            out.push_str(&format!(
                "skipped (names not bound): {}\n",
                self.skipped.join(", ")
            ));
        }
        out.push_str(if self.pass {
            "RESULT: pass\n"
        } else {
            "RESULT: fail\n"
        });
        out
    }

    pub fn render_json(&self) -> String {
        let sections: Vec<serde_json::Value> = self
            .sections
            .iter()
            .map(|(title, report)| {
                let items: Vec<serde_json::Value> = report
                    .items
                    .iter()
                    .map(|i| {
                        serde_json::json!({
                            "name": i.name,
                            "pass": i.pass,
                            "witness": i.witness.map(|w| serde_json::json!({"row": w.row, "col": w.col})),
                        })
                    })
                    .collect();
                serde_json::json!({
                    "title": title,
                    "pass": report.passed(),
                    "notes": report.notes,
                    "items": items,
                })
            })
            .collect();
        let facts: serde_json::Map<String, serde_json::Value> = self
            .facts
            .iter()
            .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
            .collect();
        let value = serde_json::json!({
            "command": self.command,
            "pass": self.pass,
            "facts": facts,
            "sections": sections,
            "skipped": self.skipped,
        });
        let mut text = serde_json::to_string_pretty(&value).expect("report renders");
        text.push('\n');
        text
    }
}

fn label(path: &Path) -> String {
    path.display().to_string()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidateKind {
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
    Qt,
    Coqt,
    Module,
    Comodule,
    Yd,
    RelHopf,
}

pub fn validate<F: Field>(kind: ValidateKind, files: &[(PathBuf, Instance<F>)]) -> Result<Outcome> {
    let mut outcome = Outcome::new("validate");
    match kind {
        ValidateKind::Algebra => {
            for (path, inst) in files {
                outcome.section(label(path), check_algebra(&inst.algebra()?));
            }
        }
        ValidateKind::Coalgebra => {
            for (path, inst) in files {
                outcome.section(label(path), check_coalgebra(&inst.coalgebra()?));
            }
        }
        ValidateKind::Bialgebra => {
            for (path, inst) in files {
                outcome.section(label(path), check_bialgebra(&inst.bialgebra()?));
            }
        }
        ValidateKind::Hopf => {
            for (path, inst) in files {
                outcome.section(label(path), check_hopf(&inst.hopf()?));
            }
        }
        ValidateKind::Qt => {
            for (path, inst) in files {
                let h = inst.hopf()?;
                let mut report = check_hopf(&h);
                report.absorb("", check_quasitriangular(&h, inst.r_matrix()?)?);
                outcome.section(label(path), report);
            }
        }
        ValidateKind::Coqt => {
            for (path, inst) in files {
                let h = inst.hopf()?;
                let mut report = check_hopf(&h);
                report.absorb("", check_coquasitriangular(&h, inst.sigma()?)?);
                outcome.section(label(path), report);
            }
        }
        ValidateKind::Module | ValidateKind::Comodule | ValidateKind::Yd => {
            let (b_path, b_inst) = files
                .first()
                .ok_or(InputError("no bialgebra file".into()))?;
            let b = b_inst.bialgebra()?;
            outcome.fact("bialgebra", label(b_path));
            let carriers: &[(PathBuf, Instance<F>)] = if files.len() > 1 {
                &files[1..]
            } else {
                &files[..1]
            };
            for (path, inst) in carriers {
                match kind {
                    ValidateKind::Module => {
                        let m = ModuleData::new(inst.dim, inst.action()?.clone())?;
                        outcome.section(label(path), check_module(&b, &m)?);
                    }
                    ValidateKind::Comodule => {
                        let c = ComoduleData::new(inst.dim, inst.coaction()?.clone())?;
                        outcome.section(label(path), check_comodule(&b, &c)?);
                    }
                    ValidateKind::Yd => {
                        let m = ModuleData::new(inst.dim, inst.action()?.clone())?;
                        let c = ComoduleData::new(inst.dim, inst.coaction()?.clone())?;
                        let mut report = check_module(&b, &m)?;
                        report.absorb("", check_comodule(&b, &c)?);
                        report.absorb("", check_yetter_drinfeld(&b, &m, &c)?);
                        outcome.section(label(path), report);
                    }
                    _ => unreachable!(),
                }
            }
        }
        ValidateKind::RelHopf => {
            if files.len() < 2 {
                return Err(InputError(
                    "validate relhopf needs a bialgebra file and a comodule-algebra file".into(),
                ));
            }
            let b = files[0].1.bialgebra()?;
            let a = files[1].1.comodule_algebra()?;
            outcome.fact("bialgebra", label(&files[0].0));
            outcome.fact("comodule_algebra", label(&files[1].0));
            let mut any = false;
            for (path, inst) in &files[1..] {
                for (name, module) in inst.rel_hopf_modules()? {
                    any = true;
                    let title = match name {
                        Some(n) => format!("{} [{n}]", label(path)),
                        None => label(path),
                    };
                    outcome.section(title, check_relative_hopf(&b, &a, &module)?);
                }
            }
            if !any {
                return Err(InputError("no module blocks found to validate".into()));
            }
        }
    }
    Ok(outcome)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransmuteKind {
    Enveloping,
    Function,
}

/// Run a transmutation; the caller writes the braided output to a file.
pub fn transmute<F: Field>(
    kind: TransmuteKind,
    inst: &Instance<F>,
) -> Result<(Transmuted<F>, Outcome)> {
    let h = inst.hopf()?;
    let out = match kind {
        TransmuteKind::Enveloping => enveloping_braided_group(&h, inst.r_matrix()?)?,
        TransmuteKind::Function => function_braided_group(&h, inst.sigma()?)?,
    };
    let mut outcome = Outcome::new("transmute");
    outcome.fact(
        "construction",
        match kind {
            TransmuteKind::Enveloping => "enveloping algebra braided group",
            TransmuteKind::Function => "left function algebra braided group",
        },
    );
    outcome.section("precondition", out.precondition.clone());
    Ok((out, outcome))
}

pub fn theorem21<F: Field>(
    b_inst: &Instance<F>,
    datum_inst: &Instance<F>,
    extra: &[(PathBuf, Instance<F>)],
) -> Result<Outcome> {
    let b = b_inst.bialgebra()?;
    let datum = MonoidalInputDatum::try_new(
        b,
        datum_inst.algebra()?,
        datum_inst.coalgebra()?,
        datum_inst.coaction()?.clone(),
        datum_inst.action()?.clone(),
    )
    .map_err(|e| InputError(e.to_string()))?;
    let mut outcome = Outcome::new("theorem21");
    if extra.is_empty() {
        let verdict = check_theorem_2_1(&datum)?;
        outcome.fact("braided_bialgebra", verdict.braided_passes());
        outcome.fact("monoidal", verdict.monoidal_passes());
        outcome.fact("agreement", verdict.agree());
        outcome.sections.push((
            "braided bialgebra conditions".into(),
            verdict.braided.clone(),
        ));
        outcome
            .sections
            .push(("monoidal conditions".into(), verdict.monoidal.clone()));
        outcome.pass = verdict.agree();
    } else {
        let braided =
            relhopf_core::transmute::check_yd_bialgebra(datum.b(), &datum.braided_candidate())?;
        let mut family = canonical_family(&datum)?;
        for (path, inst) in extra {
            for (_, module) in inst.rel_hopf_modules()? {
                family.push(module);
            }
            outcome.fact("extra_modules_from", label(path));
        }
        let monoidal = check_monoidal_conditions(&datum, &family, CheckMode::Full)?;
        let agree = braided.passed() == monoidal.passed();
        outcome.fact("braided_bialgebra", braided.passed());
        outcome.fact("monoidal", monoidal.passed());
        outcome.fact("agreement", agree);
        outcome
            .sections
            .push(("braided bialgebra conditions".into(), braided));
        outcome
            .sections
            .push(("monoidal conditions".into(), monoidal));
        outcome.pass = agree;
    }
    Ok(outcome)
}

pub fn prop34<F: Field>(b_inst: &Instance<F>, a_inst: &Instance<F>) -> Result<Outcome> {
    let b = b_inst.bialgebra()?;
    let a = a_inst.bialgebra()?;
    let verdict = check_trivial_action_doi_hopf(&b, &a, a_inst.coaction()?)?;
    let mut outcome = Outcome::new("prop34");
    outcome.fact("doi_hopf_conditions", verdict.cob.passed());
    outcome.fact("braided_bialgebra", verdict.braided.passed());
    outcome.fact("agreement", verdict.agree());
    outcome
        .sections
        .push(("Doi-Hopf conditions".into(), verdict.cob.clone()));
    outcome.sections.push((
        "braided bialgebra conditions".into(),
        verdict.braided.clone(),
    ));
    outcome.pass = verdict.agree();
    Ok(outcome)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteKind {
    Long,
    YdIdent,
}

pub fn suite<F: Field>(
    kind: SuiteKind,
    inst: &Instance<F>,
    samples: usize,
    seed: u64,
) -> Result<Outcome> {
    let h = inst.hopf()?;
    let report = match kind {
        SuiteKind::Long => long_dimodule_suite(&h, samples, seed, 3),
        SuiteKind::YdIdent => yd_identification_suite(&h, samples, seed, 3),
    }
    .map_err(|e| InputError(e.to_string()))?;
    let mut outcome = Outcome::new("suite");
    outcome.fact(
        "suite",
        match kind {
            SuiteKind::Long => "long-dimodule identification",
            SuiteKind::YdIdent => "yetter-drinfeld identification",
        },
    );
    outcome.fact("samples", samples);
    outcome.fact("seed", seed);
    outcome.section("predicate agreement", report);
    Ok(outcome)
}

/// Build a DSL environment from instance files following the role
/// convention: first file = `B` (generators `mB`, `etaB`, `DeltaB`, `epsB`,
/// and `SB` when an antipode is present), second file = `A` with `coact` and
/// `act` when present, further files = modules `X`, `Y`, `Z` from their first
/// module block.
pub fn build_env<F: Field>(files: &[(PathBuf, Instance<F>)]) -> Result<Environment<F>> {
    let (_, first) = files
        .first()
        .ok_or(InputError("no environment files".into()))?;
    let mut env = Environment::new(first.field.clone());
    let b = first.bialgebra()?;
    roles::add_bialgebra(&mut env, "B", "B", &b).map_err(|e| InputError(e.to_string()))?;
    if let Some(s) = &first.antipode {
        env.add_generator("SB", &["B"], &["B"], s.clone())
            .map_err(|e| InputError(e.to_string()))?;
    }
    if files.len() > 1 {
        let (_, second) = &files[1];
        env.add_object("A", second.dim)
            .map_err(|e| InputError(e.to_string()))?;
        if let (Some(m), Some(u)) = (&second.mult, &second.unit) {
            env.add_generator("mA", &["A", "A"], &["A"], m.clone())
                .map_err(|e| InputError(e.to_string()))?;
            env.add_generator("etaA", &["I"], &["A"], u.clone())
                .map_err(|e| InputError(e.to_string()))?;
        }
        if let (Some(cm), Some(cu)) = (&second.comult, &second.counit) {
            env.add_generator("DeltaA", &["A"], &["A", "A"], cm.clone())
                .map_err(|e| InputError(e.to_string()))?;
            env.add_generator("epsA", &["A"], &["I"], cu.clone())
                .map_err(|e| InputError(e.to_string()))?;
        }
        if let Some(co) = &second.coaction {
            env.add_generator("coact", &["A"], &["B", "A"], co.clone())
                .map_err(|e| InputError(e.to_string()))?;
        }
        if let Some(act) = &second.action {
            env.add_generator("act", &["B", "A"], &["A"], act.clone())
                .map_err(|e| InputError(e.to_string()))?;
        }
    }
    let module_names = ["X", "Y", "Z"];
    for (idx, (path, inst)) in files.iter().enumerate().skip(2) {
        let name = module_names.get(idx - 2).ok_or(InputError(
            "at most three module environment files are supported".into(),
        ))?;
        let modules = inst.rel_hopf_modules()?;
        let (_, module) = modules
            .first()
            .ok_or_else(|| InputError(format!("{}: no module block", path.display())))?;
        roles::add_rel_hopf_module(&mut env, name, module)
            .map_err(|e| InputError(e.to_string()))?;
    }
    Ok(env)
}

pub fn identities<F: Field>(
    idfile_text: &str,
    files: &[(PathBuf, Instance<F>)],
) -> Result<Outcome> {
    let env = build_env(files)?;
    let run =
        morphdsl::run_identity_file(idfile_text, &env).map_err(|e| InputError(e.to_string()))?;
    let mut outcome = Outcome::new("identities");
    outcome.fact("checked", run.report.items.len());
    outcome.fact("skipped", run.skipped.len());
    outcome.section("identities", run.report);
    outcome.skipped = run.skipped;
    Ok(outcome)
}
