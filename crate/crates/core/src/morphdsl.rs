//! A small textual language for morphism expressions over named generators,
//! compiled to exact matrices, so diagrammatic identities ship as executable
//! text.
//!
//! Grammar (EBNF):
//!
//! ```text
//! expr   := term { "." term }
//! term   := factor { "x" factor }
//! factor := NAME | "id" "(" NAME ")" | "flip" "(" NAME "," NAME ")" | "(" expr ")"
//! ```
//!
//! `.` composes (apply the right side first) and `x` is the tensor product;
//! the Unicode synonyms `∘` and `⊗` are accepted. `id`, `flip` and `x` are
//! reserved words. The object name `I` is reserved for the monoidal unit: it
//! is one-dimensional and is absorbed when interfaces are concatenated, so
//! maps from or to the unit (units, counits, elements, forms) type-check
//! without a special case.
//!
//! Identity files contain one identity per line, `NAME : LHS == RHS`, with
//! `#` comments.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::field::Field;
use crate::hopfcore::BialgebraData;
use crate::monoidal::MonoidalInputDatum;
use crate::report::{CheckItem, CheckReport};
use crate::reptheory::RelHopfModuleData;
use crate::tensorlin::{flip, LinearMap};

/// Reserved name of the monoidal unit object.
pub const UNIT_OBJECT: &str = "I";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MorphismExpr {
    Gen(String),
    Id(String),
    Flip(String, String),
    Compose(Box<MorphismExpr>, Box<MorphismExpr>),
    Tensor(Box<MorphismExpr>, Box<MorphismExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DslError {
    #[error("line {line}, column {col}: {message}")]
    Lex {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("line {line}, column {col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("interface mismatch {context}: expected ({}), found ({})", expected.join(", "), found.join(", "))]
    TypeMismatch {
        context: String,
        expected: Vec<String>,
        found: Vec<String>,
    },
    #[error("identity file line {line}: {message}")]
    IdentityLine { line: usize, message: String },
    #[error("{0}")]
    Env(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Name(String),
    Dot,
    Tensor,
    LParen,
    RParen,
    Comma,
}

#[derive(Debug, Clone)]
struct Spanned {
    token: Token,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, DslError> {
    let mut out = Vec::new();
    for (line_idx, line) in text.lines().enumerate() {
        let line_no = line_idx + 1;
        let mut chars = line.char_indices().peekable();
        while let Some(&(byte, c)) = chars.peek() {
            let col = line[..byte].chars().count() + 1;
            match c {
                ' ' | '\t' | '\r' => {
                    chars.next();
                }
                '#' => break,
                '.' | '∘' => {
                    chars.next();
                    out.push(Spanned {
                        token: Token::Dot,
                        line: line_no,
                        col,
                    });
                }
                '⊗' => {
                    chars.next();
                    out.push(Spanned {
                        token: Token::Tensor,
                        line: line_no,
                        col,
                    });
                }
                '(' => {
                    chars.next();
                    out.push(Spanned {
                        token: Token::LParen,
                        line: line_no,
                        col,
                    });
                }
                ')' => {
                    chars.next();
                    out.push(Spanned {
                        token: Token::RParen,
                        line: line_no,
                        col,
                    });
                }
                ',' => {
                    chars.next();
                    out.push(Spanned {
                        token: Token::Comma,
                        line: line_no,
                        col,
                    });
                }
                c if c.is_alphabetic() || c == '_' => {
                    let start = byte;
                    let mut end = byte + c.len_utf8();
                    chars.next();
                    while let Some(&(b, c2)) = chars.peek() {
                        if c2.is_alphanumeric() || c2 == '_' {
                            end = b + c2.len_utf8();
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    let word = &line[start..end];
                    let token = if word == "x" {
                        Token::Tensor
                    } else {
                        Token::Name(word.to_string())
                    };
                    out.push(Spanned {
                        token,
                        line: line_no,
                        col,
                    });
                }
                other => {
                    return Err(DslError::Lex {
                        line: line_no,
                        col,
                        message: format!("unexpected character `{other}`"),
                    });
                }
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err_here(&self, message: impl Into<String>) -> DslError {
        match self.tokens.get(self.pos).or_else(|| self.tokens.last()) {
            Some(t) => DslError::Syntax {
                line: t.line,
                col: t.col,
                message: message.into(),
            },
            None => DslError::Syntax {
                line: 1,
                col: 1,
                message: message.into(),
            },
        }
    }

    fn expect(&mut self, token: Token, what: &str) -> Result<(), DslError> {
        match self.next() {
            Some(t) if t.token == token => Ok(()),
            Some(t) => Err(DslError::Syntax {
                line: t.line,
                col: t.col,
                message: format!("expected {what}"),
            }),
            None => Err(DslError::Syntax {
                line: 0,
                col: 0,
                message: format!("expected {what}, found end of input"),
            }),
        }
    }

    fn expect_name(&mut self, what: &str) -> Result<String, DslError> {
        match self.next() {
            Some(Spanned {
                token: Token::Name(n),
                ..
            }) => Ok(n),
            Some(t) => Err(DslError::Syntax {
                line: t.line,
                col: t.col,
                message: format!("expected {what}"),
            }),
            None => Err(DslError::Syntax {
                line: 0,
                col: 0,
                message: format!("expected {what}, found end of input"),
            }),
        }
    }

    fn expr(&mut self) -> Result<MorphismExpr, DslError> {
        let mut acc = self.term()?;
        while matches!(
            self.peek(),
            Some(Spanned {
                token: Token::Dot,
                ..
            })
        ) {
            self.next();
            let rhs = self.term()?;
            acc = MorphismExpr::Compose(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MorphismExpr, DslError> {
        let mut acc = self.factor()?;
        while matches!(
            self.peek(),
            Some(Spanned {
                token: Token::Tensor,
                ..
            })
        ) {
            self.next();
            let rhs = self.factor()?;
            acc = MorphismExpr::Tensor(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MorphismExpr, DslError> {
        match self.peek().cloned() {
            Some(Spanned {
                token: Token::Name(name),
                ..
            }) => {
                self.next();
                match name.as_str() {
                    "id" => {
                        self.expect(Token::LParen, "`(` after `id`")?;
                        let obj = self.expect_name("object name")?;
                        self.expect(Token::RParen, "`)`")?;
                        Ok(MorphismExpr::Id(obj))
                    }
                    "flip" => {
                        self.expect(Token::LParen, "`(` after `flip`")?;
                        let a = self.expect_name("object name")?;
                        self.expect(Token::Comma, "`,`")?;
                        let b = self.expect_name("object name")?;
                        self.expect(Token::RParen, "`)`")?;
                        Ok(MorphismExpr::Flip(a, b))
                    }
                    _ => Ok(MorphismExpr::Gen(name)),
                }
            }
            Some(Spanned {
                token: Token::LParen,
                ..
            }) => {
                self.next();
                let inner = self.expr()?;
                self.expect(Token::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(self.err_here("expected a name, `id`, `flip`, or `(`")),
        }
    }
}

/// Parse a single morphism expression.
pub fn parse(text: &str) -> Result<MorphismExpr, DslError> {
    let tokens = lex(text)?;
    if tokens.is_empty() {
        return Err(DslError::Syntax {
            line: 1,
            col: 1,
            message: "empty expression".into(),
        });
    }
    let mut parser = Parser { tokens, pos: 0 };
    let expr = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.err_here("trailing input after expression"));
    }
    Ok(expr)
}

/// Canonical text form; `parse(print(e)) == e` for every AST.
pub fn print(expr: &MorphismExpr) -> String {
    fn go(e: &MorphismExpr, required: u8, out: &mut String) {
        let prec = match e {
            MorphismExpr::Compose(..) => 1,
            MorphismExpr::Tensor(..) => 2,
            _ => 3,
        };
        if prec < required {
            out.push('(');
        }
        match e {
            MorphismExpr::Gen(n) => out.push_str(n),
            MorphismExpr::Id(o) => {
                out.push_str("id(");
                out.push_str(o);
                out.push(')');
            }
            MorphismExpr::Flip(a, b) => {
                out.push_str("flip(");
                out.push_str(a);
                out.push_str(", ");
                out.push_str(b);
                out.push(')');
            }
            MorphismExpr::Compose(l, r) => {
                go(l, 1, out);
                out.push_str(" . ");
                go(r, 2, out);
            }
            MorphismExpr::Tensor(l, r) => {
                go(l, 2, out);
                out.push_str(" x ");
                go(r, 3, out);
            }
        }
        if prec < required {
            out.push(')');
        }
    }
    let mut out = String::new();
    go(expr, 1, &mut out);
    out
}

#[derive(Debug, Clone)]
struct Generator<F: Field> {
    domain: Vec<String>,
    codomain: Vec<String>,
    map: LinearMap<F>,
}

/// Named objects with dimensions, and named generators with typed payloads.
#[derive(Debug, Clone)]
pub struct Environment<F: Field> {
    field: F,
    objects: BTreeMap<String, usize>,
    generators: BTreeMap<String, Generator<F>>,
}

impl<F: Field> Environment<F> {
    pub fn new(field: F) -> Self {
        Environment {
            field,
            objects: BTreeMap::new(),
            generators: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn add_object(&mut self, name: impl Into<String>, dim: usize) -> Result<(), DslError> {
        let name = name.into();
        if name == UNIT_OBJECT {
            return Err(DslError::Env(format!(
                "`{UNIT_OBJECT}` is reserved for the unit object"
            )));
        }
        if dim == 0 {
            return Err(DslError::Env(format!(
                "object `{name}` must have positive dimension"
            )));
        }
        if self.objects.insert(name.clone(), dim).is_some() {
            return Err(DslError::Env(format!("object `{name}` declared twice")));
        }
        Ok(())
    }

    pub fn object_dim(&self, name: &str) -> Option<usize> {
        if name == UNIT_OBJECT {
            Some(1)
        } else {
            self.objects.get(name).copied()
        }
    }

    pub fn has_object(&self, name: &str) -> bool {
        name == UNIT_OBJECT || self.objects.contains_key(name)
    }

    pub fn has_generator(&self, name: &str) -> bool {
        self.generators.contains_key(name)
    }

    /// Declare a generator with its interface. Occurrences of the unit
    /// object are dropped from the stored interface; the payload's total
    /// dimensions must match the remaining objects.
    pub fn add_generator(
        &mut self,
        name: impl Into<String>,
        domain: &[&str],
        codomain: &[&str],
        map: LinearMap<F>,
    ) -> Result<(), DslError> {
        let name = name.into();
        if ["id", "flip", "x"].contains(&name.as_str()) {
            return Err(DslError::Env(format!("`{name}` is reserved")));
        }
        let filter = |names: &[&str]| -> Result<Vec<String>, DslError> {
            let mut out = Vec::new();
            for n in names {
                if *n == UNIT_OBJECT {
                    continue;
                }
                if !self.objects.contains_key(*n) {
                    return Err(DslError::UnknownName((*n).to_string()));
                }
                out.push((*n).to_string());
            }
            Ok(out)
        };
        let domain = filter(domain)?;
        let codomain = filter(codomain)?;
        let dom_total: usize = domain.iter().map(|o| self.objects[o]).product();
        let cod_total: usize = codomain.iter().map(|o| self.objects[o]).product();
        if map.domain_total() != dom_total || map.codomain_total() != cod_total {
            return Err(DslError::Env(format!(
                "generator `{name}`: payload is {}×{}, interface needs {}×{}",
                map.codomain_total(),
                map.domain_total(),
                cod_total,
                dom_total
            )));
        }
        if self
            .generators
            .insert(
                name.clone(),
                Generator {
                    domain,
                    codomain,
                    map,
                },
            )
            .is_some()
        {
            return Err(DslError::Env(format!("generator `{name}` declared twice")));
        }
        Ok(())
    }

    pub fn generator_names(&self) -> impl Iterator<Item = &str> {
        self.generators.keys().map(|s| s.as_str())
    }
}

/// An expression with its inferred interface (unit objects removed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypedExpr {
    pub expr: MorphismExpr,
    pub domain: Vec<String>,
    pub codomain: Vec<String>,
}

/// Infer and check interfaces bottom-up.
pub fn elaborate<F: Field>(
    expr: &MorphismExpr,
    env: &Environment<F>,
) -> Result<TypedExpr, DslError> {
    fn go<F: Field>(
        e: &MorphismExpr,
        env: &Environment<F>,
    ) -> Result<(Vec<String>, Vec<String>), DslError> {
        match e {
            MorphismExpr::Gen(name) => match env.generators.get(name) {
                Some(g) => Ok((g.domain.clone(), g.codomain.clone())),
                None => Err(DslError::UnknownName(name.clone())),
            },
            MorphismExpr::Id(obj) => {
                if !env.has_object(obj) {
                    return Err(DslError::UnknownName(obj.clone()));
                }
                let iface: Vec<String> = if obj == UNIT_OBJECT {
                    vec![]
                } else {
                    vec![obj.clone()]
                };
                Ok((iface.clone(), iface))
            }
            MorphismExpr::Flip(a, b) => {
                for o in [a, b] {
                    if !env.has_object(o) {
                        return Err(DslError::UnknownName(o.clone()));
                    }
                }
                let keep = |o: &String| o != UNIT_OBJECT;
                let dom: Vec<String> = [a, b].into_iter().filter(|o| keep(o)).cloned().collect();
                let cod: Vec<String> = [b, a].into_iter().filter(|o| keep(o)).cloned().collect();
                Ok((dom, cod))
            }
            MorphismExpr::Compose(f, g) => {
                let (f_dom, f_cod) = go(f, env)?;
                let (g_dom, g_cod) = go(g, env)?;
                if f_dom != g_cod {
                    return Err(DslError::TypeMismatch {
                        context: "in composition".into(),
                        expected: f_dom,
                        found: g_cod,
                    });
                }
                Ok((g_dom, f_cod))
            }
            MorphismExpr::Tensor(f, g) => {
                let (mut f_dom, mut f_cod) = go(f, env)?;
                let (g_dom, g_cod) = go(g, env)?;
                f_dom.extend(g_dom);
                f_cod.extend(g_cod);
                Ok((f_dom, f_cod))
            }
        }
    }
    let (domain, codomain) = go(expr, env)?;
    Ok(TypedExpr {
        expr: expr.clone(),
        domain,
        codomain,
    })
}

/// Evaluate an elaborated expression to its exact matrix.
pub fn evaluate<F: Field>(typed: &TypedExpr, env: &Environment<F>) -> LinearMap<F> {
    fn go<F: Field>(e: &MorphismExpr, env: &Environment<F>) -> LinearMap<F> {
        match e {
            MorphismExpr::Gen(name) => env.generators[name].map.clone(),
            MorphismExpr::Id(obj) => {
                let dims = if obj == UNIT_OBJECT {
                    vec![]
                } else {
                    vec![env.objects[obj]]
                };
                LinearMap::identity(env.field.clone(), dims)
            }
            MorphismExpr::Flip(a, b) => {
                let da = env.object_dim(a).expect("elaborated");
                let db = env.object_dim(b).expect("elaborated");
                flip(env.field.clone(), da, db)
            }
            MorphismExpr::Compose(f, g) => go(f, env)
                .compose(&go(g, env))
                .expect("elaboration checked interfaces"),
            MorphismExpr::Tensor(f, g) => go(f, env).tensor(&go(g, env)).expect("same field"),
        }
    }
    go(&typed.expr, env)
}

/// Parse, elaborate and evaluate both sides and compare the matrices.
pub fn check_identity<F: Field>(
    name: &str,
    lhs_text: &str,
    rhs_text: &str,
    env: &Environment<F>,
) -> Result<CheckItem, DslError> {
    let lhs = elaborate(&parse(lhs_text)?, env)?;
    let rhs = elaborate(&parse(rhs_text)?, env)?;
    if lhs.domain != rhs.domain || lhs.codomain != rhs.codomain {
        return Err(DslError::TypeMismatch {
            context: format!("between the sides of `{name}`"),
            expected: lhs.domain.iter().chain(&lhs.codomain).cloned().collect(),
            found: rhs.domain.iter().chain(&rhs.codomain).cloned().collect(),
        });
    }
    let left = evaluate(&lhs, env);
    let right = evaluate(&rhs, env);
    let witness = left.first_difference(&right);
    Ok(CheckItem {
        name: name.to_string(),
        pass: witness.is_none(),
        witness,
    })
}

/// A named identity from an identity file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    pub name: String,
    pub lhs: MorphismExpr,
    pub rhs: MorphismExpr,
}

/// Parse an identity file: one `NAME : LHS == RHS` per line, `#` comments.
pub fn parse_identity_file(text: &str) -> Result<Vec<Identity>, DslError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let (name, rest) = line.split_once(':').ok_or(DslError::IdentityLine {
            line: line_no,
            message: "missing `name :` prefix".into(),
        })?;
        let name = name.trim();
        if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
            return Err(DslError::IdentityLine {
                line: line_no,
                message: format!("invalid identity name `{name}`"),
            });
        }
        let (lhs, rhs) = rest.split_once("==").ok_or(DslError::IdentityLine {
            line: line_no,
            message: "missing `==`".into(),
        })?;
        out.push(Identity {
            name: name.to_string(),
            lhs: parse(lhs)?,
            rhs: parse(rhs)?,
        });
    }
    Ok(out)
}

fn names_of(expr: &MorphismExpr, gens: &mut BTreeSet<String>, objs: &mut BTreeSet<String>) {
    match expr {
        MorphismExpr::Gen(n) => {
            gens.insert(n.clone());
        }
        MorphismExpr::Id(o) => {
            objs.insert(o.clone());
        }
        MorphismExpr::Flip(a, b) => {
            objs.insert(a.clone());
            objs.insert(b.clone());
        }
        MorphismExpr::Compose(l, r) | MorphismExpr::Tensor(l, r) => {
            names_of(l, gens, objs);
            names_of(r, gens, objs);
        }
    }
}

/// Whether every name in the identity is bound in the environment.
pub fn applicable<F: Field>(identity: &Identity, env: &Environment<F>) -> bool {
    let mut gens = BTreeSet::new();
    let mut objs = BTreeSet::new();
    names_of(&identity.lhs, &mut gens, &mut objs);
    names_of(&identity.rhs, &mut gens, &mut objs);
    gens.iter().all(|g| env.has_generator(g)) && objs.iter().all(|o| env.has_object(o))
}

/// Result of running an identity file against an environment.
#[derive(Debug, Clone)]
pub struct IdentityRun {
    pub report: CheckReport,
    /// Identities whose names are not all bound in the environment.
    pub skipped: Vec<String>,
}

/// Check every applicable identity of the file; unbound ones are listed as
/// skipped rather than failed.
pub fn run_identity_file<F: Field>(
    text: &str,
    env: &Environment<F>,
) -> Result<IdentityRun, DslError> {
    let identities = parse_identity_file(text)?;
    let mut report = CheckReport::new();
    let mut skipped = Vec::new();
    for identity in &identities {
        if !applicable(identity, env) {
            skipped.push(identity.name.clone());
            continue;
        }
        let item = check_identity(
            &identity.name,
            &print(&identity.lhs),
            &print(&identity.rhs),
            env,
        )?;
        report.push(item);
    }
    Ok(IdentityRun { report, skipped })
}

impl fmt::Display for MorphismExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print(self))
    }
}

/// Standard role names used by the shipped identity file and the CLI when
/// instances are turned into environments.
pub mod roles {
    use super::*;

    /// Add a bialgebra under object name `obj` with generators
    /// `m{suffix}`, `eta{suffix}`, `Delta{suffix}`, `eps{suffix}`.
    pub fn add_bialgebra<F: Field>(
        env: &mut Environment<F>,
        obj: &str,
        suffix: &str,
        b: &BialgebraData<F>,
    ) -> Result<(), DslError> {
        env.add_object(obj, b.dim())?;
        env.add_generator(format!("m{suffix}"), &[obj, obj], &[obj], b.mult().clone())?;
        env.add_generator(
            format!("eta{suffix}"),
            &[UNIT_OBJECT],
            &[obj],
            b.unit().clone(),
        )?;
        env.add_generator(
            format!("Delta{suffix}"),
            &[obj],
            &[obj, obj],
            b.comult().clone(),
        )?;
        env.add_generator(
            format!("eps{suffix}"),
            &[obj],
            &[UNIT_OBJECT],
            b.counit().clone(),
        )?;
        Ok(())
    }

    /// Add the `A` side of an input datum: `mA`, `etaA`, `DeltaA`, `epsA`,
    /// the coaction `coact : A → B ⊗ A`, and the action `act : B ⊗ A → A`.
    pub fn add_datum<F: Field>(
        env: &mut Environment<F>,
        datum: &MonoidalInputDatum<F>,
    ) -> Result<(), DslError> {
        env.add_object("A", datum.a_dim())?;
        env.add_generator("mA", &["A", "A"], &["A"], datum.a_algebra().mult().clone())?;
        env.add_generator(
            "etaA",
            &[UNIT_OBJECT],
            &["A"],
            datum.a_algebra().unit().clone(),
        )?;
        env.add_generator(
            "DeltaA",
            &["A"],
            &["A", "A"],
            datum.a_coalgebra().comult().clone(),
        )?;
        env.add_generator(
            "epsA",
            &["A"],
            &[UNIT_OBJECT],
            datum.a_coalgebra().counit().clone(),
        )?;
        env.add_generator("coact", &["A"], &["B", "A"], datum.a_coaction().clone())?;
        env.add_generator("act", &["B", "A"], &["A"], datum.a_action().clone())?;
        Ok(())
    }

    /// Add a relative Hopf module under object name `obj` with generators
    /// `coact{obj} : obj → B ⊗ obj` and `ract{obj} : obj ⊗ A → obj`.
    pub fn add_rel_hopf_module<F: Field>(
        env: &mut Environment<F>,
        obj: &str,
        module: &RelHopfModuleData<F>,
    ) -> Result<(), DslError> {
        env.add_object(obj, module.carrier_dim())?;
        env.add_generator(
            format!("coact{obj}"),
            &[obj],
            &["B", obj],
            module.coaction().clone(),
        )?;
        env.add_generator(
            format!("ract{obj}"),
            &[obj, "A"],
            &[obj],
            module.right_action().clone(),
        )?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_group_algebra, z_n_table};
    use crate::field::Rationals;

    fn kz2_env() -> Environment<Rationals> {
        let h = build_group_algebra(Rationals, &z_n_table(2)).unwrap();
        let mut env = Environment::new(Rationals);
        roles::add_bialgebra(&mut env, "B", "B", h.bialgebra()).unwrap();
        env.add_generator("SB", &["B"], &["B"], h.antipode().clone())
            .unwrap();
        env
    }

    #[test]
    fn parse_shapes() {
        let e = parse("id(B) . id(B)").unwrap();
        assert_eq!(
            e,
            MorphismExpr::Compose(
                Box::new(MorphismExpr::Id("B".into())),
                Box::new(MorphismExpr::Id("B".into()))
            )
        );
        let e = parse("m ∘ (m ⊗ id(B))").unwrap();
        assert_eq!(
            e,
            MorphismExpr::Compose(
                Box::new(MorphismExpr::Gen("m".into())),
                Box::new(MorphismExpr::Tensor(
                    Box::new(MorphismExpr::Gen("m".into())),
                    Box::new(MorphismExpr::Id("B".into()))
                ))
            )
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse("m .").unwrap_err();
        assert!(matches!(err, DslError::Syntax { line: 1, .. }));
        let err = parse("m @ n").unwrap_err();
        assert!(matches!(
            err,
            DslError::Lex {
                line: 1,
                col: 3,
                ..
            }
        ));
    }

    #[test]
    fn elaboration_types_and_rejects() {
        let env = kz2_env();
        let typed = elaborate(&parse("mB . (id(B) x mB)").unwrap(), &env).unwrap();
        assert_eq!(typed.domain, vec!["B", "B", "B"]);
        assert_eq!(typed.codomain, vec!["B"]);
        let typed = elaborate(&parse("epsB . mB").unwrap(), &env).unwrap();
        assert_eq!(typed.domain, vec!["B", "B"]);
        assert!(typed.codomain.is_empty());
        let err = elaborate(&parse("mB . epsB").unwrap(), &env).unwrap_err();
        assert!(matches!(err, DslError::TypeMismatch { .. }));
        let err = elaborate(&parse("nosuch").unwrap(), &env).unwrap_err();
        assert_eq!(err, DslError::UnknownName("nosuch".into()));
    }

    #[test]
    fn evaluation_matches_native_composition() {
        let env = kz2_env();
        let typed = elaborate(&parse("id(B)").unwrap(), &env).unwrap();
        assert_eq!(
            evaluate(&typed, &env),
            LinearMap::identity(Rationals, vec![2])
        );
        let item = check_identity("assoc", "mB . (mB x id(B))", "mB . (id(B) x mB)", &env).unwrap();
        assert!(item.pass);
        let item = check_identity(
            "delta_mult",
            "DeltaB . mB",
            "(mB x mB) . (id(B) x flip(B,B) x id(B)) . (DeltaB x DeltaB)",
            &env,
        )
        .unwrap();
        assert!(item.pass);
        let item = check_identity(
            "antipode",
            "mB . (SB x id(B)) . DeltaB",
            "etaB . epsB",
            &env,
        )
        .unwrap();
        assert!(item.pass);
    }

    #[test]
    fn yang_baxter_in_flips() {
        let env = kz2_env();
        let item = check_identity(
            "qybe",
            "(flip(B,B) x id(B)) . (id(B) x flip(B,B)) . (flip(B,B) x id(B))",
            "(id(B) x flip(B,B)) . (flip(B,B) x id(B)) . (id(B) x flip(B,B))",
            &env,
        )
        .unwrap();
        assert!(item.pass);
    }

    #[test]
    fn unit_object_is_absorbed() {
        let env = kz2_env();
        let item = check_identity("unit_left", "mB . (etaB x id(B))", "id(B)", &env).unwrap();
        assert!(item.pass);
        let item = check_identity("eps_unit", "epsB . etaB", "id(I)", &env).unwrap();
        assert!(item.pass);
    }

    #[test]
    fn identity_file_parsing_and_skipping() {
        let text = "\
# a comment
assoc: mB . (mB x id(B)) == mB . (id(B) x mB)
needs_a: mA . (mA x id(A)) == mA . (id(A) x mA)
";
        let env = kz2_env();
        let run = run_identity_file(text, &env).unwrap();
        assert_eq!(run.skipped, vec!["needs_a".to_string()]);
        assert!(run.report.passed());
        assert_eq!(run.report.items.len(), 1);
        assert!(parse_identity_file("oops").is_err());
        assert!(parse_identity_file("name : lhs = rhs").is_err());
    }

    #[test]
    fn print_round_trips() {
        for text in [
            "mB . (mB x id(B))",
            "(mB x mB) . (id(B) x flip(B,B) x id(B)) . (DeltaB x DeltaB)",
            "epsB . etaB",
        ] {
            let e = parse(text).unwrap();
            assert_eq!(parse(&print(&e)).unwrap(), e);
        }
    }
}
