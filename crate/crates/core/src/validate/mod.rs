//! Facet and domain/range checks over the individuals of an ontology.
//!
//! Each check is a [`ValidationRule`] registered by name in a
//! [`RuleRegistry`]; [`validate`] runs the built-in set.

mod rules;

use crate::diagnostic::{sort_diagnostics, Diagnostic, Severity};
use crate::model::Ontology;
use crate::reasoner::{Realization, TaxonomyClosure};

pub use rules::{
    AllowedValuesRule, DataDomainRule, MultipleCardinalityRule, ObjectDomainRangeRule, SingleCardinalityRule,
    ValueTypeRule,
};

/// Everything a rule may look at.
pub struct ValidationContext<'a> {
    pub ontology: &'a Ontology,
    pub closure: &'a TaxonomyClosure,
    pub realization: &'a Realization,
}

pub trait ValidationRule: Send + Sync {
    /// Registry key, e.g. `card-single`.
    fn name(&self) -> &'static str;

    fn check(&self, ctx: &ValidationContext<'_>, out: &mut Vec<Diagnostic>);
}

#[derive(Default)]
pub struct RuleRegistry {
    rules: Vec<Box<dyn ValidationRule>>,
}

impl RuleRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// The rules [`validate`] runs.
    pub fn builtin() -> Self {
        let mut reg = Self::new();
        reg.register(Box::new(ValueTypeRule));
        reg.register(Box::new(AllowedValuesRule));
        reg.register(Box::new(SingleCardinalityRule));
        reg.register(Box::new(MultipleCardinalityRule));
        reg.register(Box::new(ObjectDomainRangeRule));
        reg.register(Box::new(DataDomainRule));
        reg
    }

    /// Adds a rule, replacing any rule registered under the same name.
    pub fn register(&mut self, rule: Box<dyn ValidationRule>) {
        self.rules.retain(|r| r.name() != rule.name());
        self.rules.push(rule);
    }

    pub fn remove(&mut self, name: &str) -> Option<Box<dyn ValidationRule>> {
        let idx = self.rules.iter().position(|r| r.name() == name)?;
        Some(self.rules.remove(idx))
    }

    pub fn get(&self, name: &str) -> Option<&dyn ValidationRule> {
        self.rules.iter().find(|r| r.name() == name).map(|r| r.as_ref())
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.rules.iter().map(|r| r.name())
    }

    pub fn run(&self, ctx: &ValidationContext<'_>) -> ValidationReport {
        let mut diagnostics = Vec::new();
        for rule in &self.rules {
            rule.check(ctx, &mut diagnostics);
        }
        sort_diagnostics(&mut diagnostics);
        let ok = diagnostics.iter().all(|d| d.severity != Severity::Error);
        ValidationReport {
            diagnostics,
            checked_assertions: ctx.ontology.obj_facts().len() + ctx.ontology.data_facts().len(),
            ok,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    /// Sorted by file, line, code.
    pub diagnostics: Vec<Diagnostic>,
    pub checked_assertions: usize,
    /// No error-severity diagnostics.
    pub ok: bool,
}

pub fn validate(o: &Ontology, closure: &TaxonomyClosure, realization: &Realization) -> ValidationReport {
    RuleRegistry::builtin().run(&ValidationContext {
        ontology: o,
        closure,
        realization,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagnostic::codes;
    use crate::model::build_ontology;
    use crate::oft::parse_oft;
    use crate::reasoner::{compute_closure, realize};

    const TBOX: &str = r#"class Date_fruit
class Species sub Date_fruit
class Benefits sub Date_fruit
individual Barhee type Species
individual Weight_gain type Benefits
dataprop has_common_name domain Species type string allowed "honey balls", "visitors dates" card single
dataprop has_date_of_origin domain Species type number card single
objprop has_benefits domain Species range Benefits
"#;

    fn report(extra: &str) -> ValidationReport {
        let r = parse_oft(&format!("{TBOX}{extra}"), "t.oft");
        assert!(r.is_clean(), "{:?}", r.diagnostics);
        let o = build_ontology("t", r.axioms).unwrap();
        let c = compute_closure(&o).unwrap();
        let re = realize(&o, &c);
        validate(&o, &c, &re)
    }

    fn codes_at(rep: &ValidationReport) -> Vec<(usize, &'static str)> {
        rep.diagnostics.iter().map(|d| (d.line, d.code)).collect()
    }

    #[test]
    fn allowed_common_name_passes() {
        let rep = report("attr Barhee has_common_name \"honey balls\"\n");
        assert!(rep.ok);
        assert!(rep.diagnostics.is_empty());
        assert_eq!(rep.checked_assertions, 1);
    }

    #[test]
    fn wrong_value_type() {
        let rep = report("attr Barhee has_date_of_origin \"old\"\n");
        assert!(!rep.ok);
        assert_eq!(codes_at(&rep), vec![(9, codes::E_TYPE_MISMATCH)]);
    }

    #[test]
    fn value_outside_allowed_set() {
        let rep = report("attr Barhee has_common_name \"sweet\"\n");
        assert_eq!(codes_at(&rep), vec![(9, codes::E_ALLOWED_VALUE)]);
    }

    #[test]
    fn two_values_for_single_property() {
        let rep =
            report("attr Barhee has_common_name \"honey balls\"\nattr Barhee has_common_name \"visitors dates\"\n");
        assert_eq!(codes_at(&rep), vec![(10, codes::E_CARD_SINGLE)]);
    }

    #[test]
    fn repeated_identical_assertion_is_one_value() {
        let rep = report("attr Barhee has_common_name \"honey balls\"\nattr Barhee has_common_name \"honey balls\"\n");
        assert!(rep.ok);
    }

    #[test]
    fn domain_and_range() {
        let rep = report("rel Weight_gain has_benefits Barhee\nattr Weight_gain has_date_of_origin 1\n");
        assert_eq!(
            codes_at(&rep),
            vec![(9, codes::E_DOMAIN), (9, codes::E_RANGE), (10, codes::E_DOMAIN)]
        );
    }

    #[test]
    fn multiple_cardinality_is_a_warning() {
        let rep = report("dataprop has_country_of_origin domain Species type string card multiple\n");
        assert!(rep.ok);
        assert_eq!(codes_at(&rep), vec![(4, codes::E_CARD_MULTIPLE)]);
        assert_eq!(rep.diagnostics[0].severity, Severity::Warning);
        let rep = report("dataprop has_country_of_origin type string card multiple\n");
        assert!(rep.diagnostics.is_empty(), "no domain, nothing to check");
    }

    #[test]
    fn registry_lookup_and_removal() {
        let mut reg = RuleRegistry::builtin();
        assert_eq!(
            reg.names().collect::<Vec<_>>(),
            vec![
                "value-type",
                "allowed-values",
                "card-single",
                "card-multiple",
                "object-domain-range",
                "data-domain"
            ]
        );
        assert!(reg.get("card-single").is_some());
        assert!(reg.remove("card-single").is_some());
        assert!(reg.get("card-single").is_none());
        reg.register(Box::new(SingleCardinalityRule));
        reg.register(Box::new(SingleCardinalityRule));
        assert_eq!(reg.names().filter(|n| *n == "card-single").count(), 1);
    }
}
