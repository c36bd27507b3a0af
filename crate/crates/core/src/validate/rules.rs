//! Built-in validation rules.

use std::collections::BTreeMap;

use crate::diagnostic::{codes, Diagnostic};
use crate::model::{Axiom, Cardinality, Ident, SourceLoc};

use super::{ValidationContext, ValidationRule};

/// Every data value must conform to its property's value type.
pub struct ValueTypeRule;

impl ValidationRule for ValueTypeRule {
    fn name(&self) -> &'static str {
        "value-type"
    }

    fn check(&self, ctx: &ValidationContext<'_>, out: &mut Vec<Diagnostic>) {
        for fact in ctx.ontology.data_facts() {
            let facet = &ctx.ontology.data_properties()[&fact.prop].facet;
            if !facet.value_type().accepts(&fact.value) {
                out.push(Diagnostic::error(
                    codes::E_TYPE_MISMATCH,
                    &fact.loc.file,
                    fact.loc.line,
                    format!(
                        "`{}` expects a {} value but `{}` has {} {}",
                        fact.prop,
                        facet.value_type(),
                        fact.subject,
                        fact.value.value_type().keyword(),
                        fact.value
                    ),
                ));
            }
        }
    }
}

/// Values of a property with an allowed list must be members of it. Values
/// that already fail the type check are not reported twice.
pub struct AllowedValuesRule;

impl ValidationRule for AllowedValuesRule {
    fn name(&self) -> &'static str {
        "allowed-values"
    }

    fn check(&self, ctx: &ValidationContext<'_>, out: &mut Vec<Diagnostic>) {
        for fact in ctx.ontology.data_facts() {
            let facet = &ctx.ontology.data_properties()[&fact.prop].facet;
            if facet.value_type().accepts(&fact.value) && !facet.permits(&fact.value) {
                let allowed: Vec<String> = facet
                    .allowed()
                    .unwrap_or_default()
                    .iter()
                    .map(ToString::to_string)
                    .collect();
                out.push(Diagnostic::error(
                    codes::E_ALLOWED_VALUE,
                    &fact.loc.file,
                    fact.loc.line,
                    format!(
                        "{} is not an allowed value of `{}` (allowed: {})",
                        fact.value,
                        fact.prop,
                        allowed.join(", ")
                    ),
                ));
            }
        }
    }
}

/// Single-cardinality properties carry at most one value per individual.
/// Each assertion beyond the first is reported at its own line.
pub struct SingleCardinalityRule;

impl ValidationRule for SingleCardinalityRule {
    fn name(&self) -> &'static str {
        "card-single"
    }

    fn check(&self, ctx: &ValidationContext<'_>, out: &mut Vec<Diagnostic>) {
        let mut seen: BTreeMap<(&Ident, &Ident), &SourceLoc> = BTreeMap::new();
        for fact in ctx.ontology.data_facts() {
            let facet = &ctx.ontology.data_properties()[&fact.prop].facet;
            if facet.cardinality() != Cardinality::Single {
                continue;
            }
            if let Some(first) = seen.get(&(&fact.subject, &fact.prop)) {
                out.push(Diagnostic::error(
                    codes::E_CARD_SINGLE,
                    &fact.loc.file,
                    fact.loc.line,
                    format!(
                        "`{}` is single-valued but `{}` already has a value (at {}:{})",
                        fact.prop, fact.subject, first.file, first.line
                    ),
                ));
            } else {
                seen.insert((&fact.subject, &fact.prop), &fact.loc);
            }
        }
    }
}

/// Multiple-cardinality properties expect at least one value on every
/// member of their domain. Reported as a warning at the individual's
/// declaration.
pub struct MultipleCardinalityRule;

impl ValidationRule for MultipleCardinalityRule {
    fn name(&self) -> &'static str {
        "card-multiple"
    }

    fn check(&self, ctx: &ValidationContext<'_>, out: &mut Vec<Diagnostic>) {
        let mut declared_at: BTreeMap<&Ident, &SourceLoc> = BTreeMap::new();
        for la in ctx.ontology.axioms() {
            if let Axiom::IndividualDecl { individual, .. } = &la.axiom {
                declared_at.entry(individual).or_insert(&la.loc);
            }
        }
        for (prop, decl) in ctx.ontology.data_properties() {
            let Some(domain) = &decl.domain else { continue };
            if decl.facet.cardinality() != Cardinality::Multiple {
                continue;
            }
            for individual in ctx.realization.members_of(domain.as_str()) {
                let has_value = ctx
                    .ontology
                    .data_facts()
                    .iter()
                    .any(|f| &f.prop == prop && &f.subject == individual);
                if !has_value {
                    let loc = declared_at[individual];
                    out.push(Diagnostic::warning(
                        codes::E_CARD_MULTIPLE,
                        &loc.file,
                        loc.line,
                        format!("`{individual}` is a `{domain}` but has no value for `{prop}`"),
                    ));
                }
            }
        }
    }
}

/// Object assertions: subject within the domain, object within the range.
pub struct ObjectDomainRangeRule;

impl ValidationRule for ObjectDomainRangeRule {
    fn name(&self) -> &'static str {
        "object-domain-range"
    }

    fn check(&self, ctx: &ValidationContext<'_>, out: &mut Vec<Diagnostic>) {
        for fact in ctx.ontology.obj_facts() {
            let decl = &ctx.ontology.object_properties()[&fact.prop];
            if let Some(domain) = &decl.domain {
                if !ctx.realization.is_member(fact.subject.as_str(), domain.as_str()) {
                    out.push(Diagnostic::error(
                        codes::E_DOMAIN,
                        &fact.loc.file,
                        fact.loc.line,
                        format!("subject `{}` of `{}` is not a `{domain}`", fact.subject, fact.prop),
                    ));
                }
            }
            if let Some(range) = &decl.range {
                if !ctx.realization.is_member(fact.object.as_str(), range.as_str()) {
                    out.push(Diagnostic::error(
                        codes::E_RANGE,
                        &fact.loc.file,
                        fact.loc.line,
                        format!("object `{}` of `{}` is not a `{range}`", fact.object, fact.prop),
                    ));
                }
            }
        }
    }
}

/// Data assertions only on individuals the property applies to.
pub struct DataDomainRule;

impl ValidationRule for DataDomainRule {
    fn name(&self) -> &'static str {
        "data-domain"
    }

    fn check(&self, ctx: &ValidationContext<'_>, out: &mut Vec<Diagnostic>) {
        for fact in ctx.ontology.data_facts() {
            let decl = &ctx.ontology.data_properties()[&fact.prop];
            let Some(domain) = &decl.domain else { continue };
            if !ctx.realization.is_member(fact.subject.as_str(), domain.as_str()) {
                out.push(Diagnostic::error(
                    codes::E_DOMAIN,
                    &fact.loc.file,
                    fact.loc.line,
                    format!(
                        "`{}` does not apply to `{}`, which is not a `{domain}`",
                        fact.prop, fact.subject
                    ),
                ));
            }
        }
    }
}
