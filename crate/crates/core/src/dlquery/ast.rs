use std::fmt;

use crate::literal::Literal;
use crate::model::Ident;

/// A class expression.
///
/// Build conjunctions through [`ClassExpr::and`] (or call
/// [`ClassExpr::normalize`]) so they stay flat, sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ClassExpr {
    Named(Ident),
    And(Vec<ClassExpr>),
    Some { prop: Ident, filler: Box<ClassExpr> },
    ValueObj { prop: Ident, individual: Ident },
    ValueData { prop: Ident, value: Literal },
}

impl ClassExpr {
    pub fn named(class: Ident) -> Self {
        ClassExpr::Named(class)
    }

    pub fn some(prop: Ident, filler: ClassExpr) -> Self {
        ClassExpr::Some {
            prop,
            filler: Box::new(filler.normalize()),
        }
    }

    /// Flattened, ordered by printed form, deduplicated. A single remaining
    /// conjunct is returned as itself.
    pub fn and(parts: impl IntoIterator<Item = ClassExpr>) -> Self {
        let mut flat = Vec::new();
        for part in parts {
            match part.normalize() {
                ClassExpr::And(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        let mut keyed: Vec<(String, ClassExpr)> = flat.into_iter().map(|e| (e.to_string(), e)).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        keyed.dedup_by(|a, b| a.0 == b.0);
        let mut parts: Vec<ClassExpr> = keyed.into_iter().map(|(_, e)| e).collect();
        match parts.len() {
            1 => parts.pop().expect("one element"),
            _ => ClassExpr::And(parts),
        }
    }

    pub fn normalize(self) -> Self {
        match self {
            ClassExpr::And(parts) => ClassExpr::and(parts),
            ClassExpr::Some { prop, filler } => ClassExpr::some(prop, *filler),
            other => other,
        }
    }

    /// Conjunct names when the expression is a named class or a conjunction
    /// of named classes.
    pub fn named_conjuncts(&self) -> Option<Vec<&Ident>> {
        match self {
            ClassExpr::Named(c) => Some(vec![c]),
            ClassExpr::And(parts) => parts
                .iter()
                .map(|p| match p {
                    ClassExpr::Named(c) => Some(c),
                    _ => None,
                })
                .collect(),
            _ => None,
        }
    }
}

/// Query syntax that parses back to the same normalized expression.
impl fmt::Display for ClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassExpr::Named(c) => write!(f, "{c}"),
            ClassExpr::And(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" and ")?;
                    }
                    if matches!(p, ClassExpr::And(_)) {
                        write!(f, "({p})")?;
                    } else {
                        write!(f, "{p}")?;
                    }
                }
                Ok(())
            }
            ClassExpr::Some { prop, filler } => match filler.as_ref() {
                ClassExpr::And(_) => write!(f, "{prop} some ({filler})"),
                _ => write!(f, "{prop} some {filler}"),
            },
            ClassExpr::ValueObj { prop, individual } => write!(f, "{prop} value {individual}"),
            ClassExpr::ValueData { prop, value } => write!(f, "{prop} value {value}"),
        }
    }
}
