//! Result modes, one strategy per mode, registered under its CLI name.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use crate::model::{EntityKind, Ident};

use super::{ClassExpr, QueryContext, QueryError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QueryMode {
    Instances,
    Subclasses,
    DirectSubclasses,
    Superclasses,
    DirectSuperclasses,
}

impl QueryMode {
    pub const ALL: [QueryMode; 5] = [
        QueryMode::Instances,
        QueryMode::Subclasses,
        QueryMode::DirectSubclasses,
        QueryMode::Superclasses,
        QueryMode::DirectSuperclasses,
    ];

    pub fn name(self) -> &'static str {
        match self {
            QueryMode::Instances => "instances",
            QueryMode::Subclasses => "subclasses",
            QueryMode::DirectSubclasses => "direct-subclasses",
            QueryMode::Superclasses => "superclasses",
            QueryMode::DirectSuperclasses => "direct-superclasses",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        QueryMode::ALL.into_iter().find(|m| m.name() == name)
    }
}

impl fmt::Display for QueryMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How one result mode answers a resolved class expression.
pub trait QueryStrategy: Send + Sync {
    fn mode(&self) -> QueryMode;

    fn evaluate(&self, ctx: &QueryContext<'_>, expr: &ClassExpr) -> Result<BTreeSet<Ident>, QueryError>;
}

/// Strategies keyed by mode name.
#[derive(Default)]
pub struct ModeRegistry {
    strategies: BTreeMap<&'static str, Box<dyn QueryStrategy>>,
}

impl ModeRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_builtin() -> Self {
        let mut reg = Self::new();
        reg.register(Box::new(Instances));
        reg.register(Box::new(Subclasses { direct: false }));
        reg.register(Box::new(Subclasses { direct: true }));
        reg.register(Box::new(Superclasses { direct: false }));
        reg.register(Box::new(Superclasses { direct: true }));
        reg
    }

    /// Shared instance holding the five built-in modes.
    pub fn builtin() -> &'static ModeRegistry {
        static REG: OnceLock<ModeRegistry> = OnceLock::new();
        REG.get_or_init(ModeRegistry::with_builtin)
    }

    pub fn register(&mut self, strategy: Box<dyn QueryStrategy>) {
        self.strategies.insert(strategy.mode().name(), strategy);
    }

    pub fn get(&self, name: &str) -> Option<&dyn QueryStrategy> {
        self.strategies.get(name).map(|s| s.as_ref())
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.strategies.keys().copied()
    }
}

/// Individuals in the extension of the expression.
pub struct Instances;

impl Instances {
    fn extension(ctx: &QueryContext<'_>, expr: &ClassExpr) -> BTreeSet<Ident> {
        match expr {
            ClassExpr::Named(c) => ctx.realization.members_of(c.as_str()).clone(),
            ClassExpr::And(parts) => {
                let mut iter = parts.iter();
                let first = iter.next().map(|p| Self::extension(ctx, p)).unwrap_or_default();
                iter.fold(first, |acc, p| {
                    let ext = Self::extension(ctx, p);
                    acc.intersection(&ext).cloned().collect()
                })
            }
            ClassExpr::Some { prop, filler } => {
                let fillers = Self::extension(ctx, filler);
                ctx.ontology
                    .obj_facts()
                    .iter()
                    .filter(|f| &f.prop == prop && fillers.contains(&f.object))
                    .map(|f| f.subject.clone())
                    .collect()
            }
            ClassExpr::ValueObj { prop, individual } => ctx
                .ontology
                .obj_facts()
                .iter()
                .filter(|f| &f.prop == prop && &f.object == individual)
                .map(|f| f.subject.clone())
                .collect(),
            ClassExpr::ValueData { prop, value } => ctx
                .ontology
                .data_facts()
                .iter()
                .filter(|f| &f.prop == prop && &f.value == value)
                .map(|f| f.subject.clone())
                .collect(),
        }
    }
}

impl QueryStrategy for Instances {
    fn mode(&self) -> QueryMode {
        QueryMode::Instances
    }

    fn evaluate(&self, ctx: &QueryContext<'_>, expr: &ClassExpr) -> Result<BTreeSet<Ident>, QueryError> {
        Ok(Self::extension(ctx, expr))
    }
}

fn named_only(expr: &ClassExpr, mode: QueryMode) -> Result<Vec<&Ident>, QueryError> {
    expr.named_conjuncts().ok_or(QueryError::UnsupportedMode { mode })
}

/// Structural subclasses: classes below every conjunct.
pub struct Subclasses {
    /// Keep only the maximal results.
    pub direct: bool,
}

impl QueryStrategy for Subclasses {
    fn mode(&self) -> QueryMode {
        if self.direct {
            QueryMode::DirectSubclasses
        } else {
            QueryMode::Subclasses
        }
    }

    fn evaluate(&self, ctx: &QueryContext<'_>, expr: &ClassExpr) -> Result<BTreeSet<Ident>, QueryError> {
        let names = named_only(expr, self.mode())?;
        let mut iter = names.iter();
        let first = ctx
            .closure
            .descendants(iter.next().expect("at least one conjunct").as_str())
            .clone();
        let all = iter.fold(first, |acc, c| {
            acc.intersection(ctx.closure.descendants(c.as_str())).cloned().collect()
        });
        if !self.direct {
            return Ok(all);
        }
        Ok(all
            .iter()
            .filter(|c| ctx.closure.ancestors(c.as_str()).is_disjoint(&all))
            .cloned()
            .collect())
    }
}

/// Structural superclasses: common subsumers of all conjuncts, the
/// conjuncts themselves excluded.
pub struct Superclasses {
    /// Keep only the minimal results.
    pub direct: bool,
}

impl QueryStrategy for Superclasses {
    fn mode(&self) -> QueryMode {
        if self.direct {
            QueryMode::DirectSuperclasses
        } else {
            QueryMode::Superclasses
        }
    }

    fn evaluate(&self, ctx: &QueryContext<'_>, expr: &ClassExpr) -> Result<BTreeSet<Ident>, QueryError> {
        let names = named_only(expr, self.mode())?;
        let up = |c: &Ident| -> BTreeSet<Ident> {
            let mut s = ctx.closure.ancestors(c.as_str()).clone();
            s.insert(c.clone());
            s
        };
        let mut iter = names.iter();
        let first = up(iter.next().expect("at least one conjunct"));
        let mut all = iter.fold(first, |acc, c| acc.intersection(&up(c)).cloned().collect());
        for c in &names {
            all.remove(c.as_str());
        }
        if !self.direct {
            return Ok(all);
        }
        Ok(all
            .iter()
            .filter(|c| ctx.closure.descendants(c.as_str()).is_disjoint(&all))
            .cloned()
            .collect())
    }
}

/// Checks every name in `expr` exists with the kind its position requires.
pub fn resolve(ctx: &QueryContext<'_>, expr: &ClassExpr) -> Result<(), QueryError> {
    let expect = |name: &Ident, kind: EntityKind| match ctx.ontology.kind_of(name.as_str()) {
        Some(k) if k == kind => Ok(()),
        found => Err(QueryError::UnknownRef {
            name: name.as_str().to_string(),
            expected: kind,
            found,
        }),
    };
    match expr {
        ClassExpr::Named(c) => expect(c, EntityKind::Class),
        ClassExpr::And(parts) => parts.iter().try_for_each(|p| resolve(ctx, p)),
        ClassExpr::Some { prop, filler } => {
            expect(prop, EntityKind::ObjectProperty)?;
            resolve(ctx, filler)
        }
        ClassExpr::ValueObj { prop, individual } => {
            expect(prop, EntityKind::ObjectProperty)?;
            expect(individual, EntityKind::Individual)
        }
        ClassExpr::ValueData { prop, .. } => expect(prop, EntityKind::DataProperty),
    }
}
