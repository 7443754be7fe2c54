//! Enumerable catalog of Padovan and Perrin identities.
//!
//! Each entry pairs a left side computed by literal summation and sequence
//! lookups with a right side computed from its closed form. The two sides
//! share no code beyond the sequence engine and exact arithmetic, so
//! agreement at a point is evidence rather than tautology.

mod catalog;
mod generic;

pub use generic::{evaluate_generic, generic_catalog, GenericAlgebraIdentity, GenericCheck};

use std::sync::{Arc, OnceLock};

use num_traits::Zero;
use serde::ser::{SerializeMap, SerializeStruct, Serializer};
use serde::Serialize;
use thiserror::Error;

use crate::harness::grid::ParamGrid;
use crate::numeric::ExactRat;
use crate::sequences::{padovan, SeqEngine};

/// A point outside the identity's admissible set, with the reason.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inadmissible(pub String);

/// One side of an identity as an exact function of the parameter values.
pub type Side = Arc<dyn Fn(&SeqEngine, &[i64]) -> Result<ExactRat, Inadmissible> + Send + Sync>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdentityError {
    #[error("unknown identity {0}")]
    UnknownIdentity(String),
    #[error("inadmissible parameters for {id}: {reason}")]
    InadmissibleParams { id: String, reason: String },
}

/// Constraint on a single integer parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    Integer,
    NonNegative,
    Positive,
    NonZero,
    /// Row number of the coefficient table, `1..=15`.
    SetId,
    /// Index `λ` with `P_λ = 0`.
    PadovanZero,
}

impl Domain {
    pub fn describe(self) -> &'static str {
        match self {
            Domain::Integer => "integer",
            Domain::NonNegative => ">= 0",
            Domain::Positive => ">= 1",
            Domain::NonZero => "!= 0",
            Domain::SetId => "1..15",
            Domain::PadovanZero => "P_lambda = 0",
        }
    }

    fn admits(self, v: i64) -> bool {
        match self {
            Domain::Integer => true,
            Domain::NonNegative => v >= 0,
            Domain::Positive => v >= 1,
            Domain::NonZero => v != 0,
            Domain::SetId => (1..=15).contains(&v),
            // every zero lies in [-17, -1]
            Domain::PadovanZero => (-17..0).contains(&v) && padovan(v).is_zero(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Param {
    pub name: &'static str,
    pub domain: Domain,
}

/// Alternative statement of an errata-watch entry, differing from the
/// printed one by `edits` sign or index changes.
#[derive(Clone)]
pub struct Correction {
    pub label: String,
    pub edits: usize,
    pub lhs: Option<Side>,
    pub rhs: Option<Side>,
}

impl std::fmt::Debug for Correction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Correction")
            .field("label", &self.label)
            .field("edits", &self.edits)
            .finish_non_exhaustive()
    }
}

pub struct IdentityDescriptor {
    pub id: String,
    pub title: String,
    /// The formula as stated, in TeX-like notation.
    pub anchor: String,
    pub params: Vec<Param>,
    pub default_grid: ParamGrid,
    /// Printed statement is suspected to contain a typographical error.
    pub errata_watch: bool,
    pub corrections: Vec<Correction>,
    lhs: Side,
    rhs: Side,
}

impl std::fmt::Debug for IdentityDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityDescriptor")
            .field("id", &self.id)
            .field("params", &self.params)
            .field("errata_watch", &self.errata_watch)
            .finish_non_exhaustive()
    }
}

/// Result of evaluating both sides at one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail { lhs: ExactRat, rhs: ExactRat },
    Skip(String),
}

impl IdentityDescriptor {
    pub fn param_names(&self) -> Vec<&'static str> {
        self.params.iter().map(|p| p.name).collect()
    }

    fn check_domains(&self, values: &[i64]) -> Result<(), Inadmissible> {
        assert_eq!(values.len(), self.params.len(), "arity mismatch for {}", self.id);
        for (p, &v) in self.params.iter().zip(values) {
            if !p.domain.admits(v) {
                return Err(Inadmissible(format!(
                    "{} = {v} violates {} {}",
                    p.name,
                    p.name,
                    p.domain.describe()
                )));
            }
        }
        Ok(())
    }

    /// Evaluates the printed statement, or `correction` in its place.
    ///
    /// The right side runs first so a vanishing closed-form denominator
    /// classifies the point before any summation.
    pub fn outcome_with(
        &self,
        eng: &SeqEngine,
        values: &[i64],
        correction: Option<&Correction>,
    ) -> Outcome {
        let lhs_fn = correction.and_then(|c| c.lhs.as_ref()).unwrap_or(&self.lhs);
        let rhs_fn = correction.and_then(|c| c.rhs.as_ref()).unwrap_or(&self.rhs);
        let sides = self
            .check_domains(values)
            .and_then(|()| rhs_fn(eng, values))
            .and_then(|rhs| lhs_fn(eng, values).map(|lhs| (lhs, rhs)));
        match sides {
            Ok((lhs, rhs)) if lhs == rhs => Outcome::Pass,
            Ok((lhs, rhs)) => Outcome::Fail { lhs, rhs },
            Err(Inadmissible(reason)) => Outcome::Skip(reason),
        }
    }

    pub fn outcome(&self, eng: &SeqEngine, values: &[i64]) -> Outcome {
        self.outcome_with(eng, values, None)
    }

    /// Full record for one point; inadmissible points are errors.
    pub fn check(&self, eng: &SeqEngine, values: &[i64]) -> Result<CheckResult, IdentityError> {
        self.check_with(eng, values, None)
    }

    pub fn check_with(
        &self,
        eng: &SeqEngine,
        values: &[i64],
        correction: Option<&Correction>,
    ) -> Result<CheckResult, IdentityError> {
        let lhs_fn = correction.and_then(|c| c.lhs.as_ref()).unwrap_or(&self.lhs);
        let rhs_fn = correction.and_then(|c| c.rhs.as_ref()).unwrap_or(&self.rhs);
        let inadmissible = |Inadmissible(reason)| IdentityError::InadmissibleParams {
            id: self.id.clone(),
            reason,
        };
        self.check_domains(values).map_err(inadmissible)?;
        let rhs = rhs_fn(eng, values).map_err(inadmissible)?;
        let lhs = lhs_fn(eng, values).map_err(inadmissible)?;
        Ok(CheckResult {
            id: self.id.clone(),
            params: self.assignment(values),
            pass: lhs == rhs,
            lhs,
            rhs,
        })
    }

    pub fn assignment(&self, values: &[i64]) -> Vec<(String, i64)> {
        self.params
            .iter()
            .zip(values)
            .map(|(p, &v)| (p.name.to_string(), v))
            .collect()
    }

    pub fn summary(&self) -> IdentitySummary {
        IdentitySummary {
            id: self.id.clone(),
            title: self.title.clone(),
            anchor: self.anchor.clone(),
            params: self
                .params
                .iter()
                .map(|p| (p.name.to_string(), p.domain.describe().to_string()))
                .collect(),
            default_grid: self.default_grid.to_string(),
            errata_watch: self.errata_watch,
        }
    }
}

/// Both sides of an identity at one parameter point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub id: String,
    pub params: Vec<(String, i64)>,
    pub lhs: ExactRat,
    pub rhs: ExactRat,
    /// `lhs == rhs` exactly.
    pub pass: bool,
}

pub(crate) struct OrderedParams<'a>(pub &'a [(String, i64)]);

impl Serialize for OrderedParams<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl Serialize for CheckResult {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CheckResult", 5)?;
        st.serialize_field("id", &self.id)?;
        st.serialize_field("params", &OrderedParams(&self.params))?;
        st.serialize_field("lhs", &self.lhs.to_string())?;
        st.serialize_field("rhs", &self.rhs.to_string())?;
        st.serialize_field("pass", &self.pass)?;
        st.end()
    }
}

/// Catalog entry without its evaluators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentitySummary {
    pub id: String,
    pub title: String,
    pub anchor: String,
    pub params: Vec<(String, String)>,
    pub default_grid: String,
    pub errata_watch: bool,
}

impl Serialize for IdentitySummary {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct Params<'a>(&'a [(String, String)]);
        impl Serialize for Params<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.0.len()))?;
                for (k, v) in self.0 {
                    map.serialize_entry(k, v)?;
                }
                map.end()
            }
        }
        let mut st = s.serialize_struct("IdentitySummary", 6)?;
        st.serialize_field("id", &self.id)?;
        st.serialize_field("title", &self.title)?;
        st.serialize_field("anchor", &self.anchor)?;
        st.serialize_field("params", &Params(&self.params))?;
        st.serialize_field("default_grid", &self.default_grid)?;
        st.serialize_field("errata_watch", &self.errata_watch)?;
        st.end()
    }
}

/// Immutable list of identities sorted by id.
pub struct Catalog {
    entries: Vec<IdentityDescriptor>,
}

/// Bumped whenever an entry is added, removed or restated.
pub const CATALOG_VERSION: &str = "1";

impl Catalog {
    pub fn build() -> Self {
        let mut entries = catalog::entries();
        entries.sort_by(|a, b| a.id.cmp(&b.id));
        for w in entries.windows(2) {
            assert_ne!(w[0].id, w[1].id, "duplicate catalog id");
        }
        Catalog { entries }
    }

    pub fn global() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(Catalog::build)
    }

    pub fn entries(&self) -> &[IdentityDescriptor] {
        &self.entries
    }

    pub fn get(&self, id: &str) -> Option<&IdentityDescriptor> {
        self.entries
            .binary_search_by(|e| e.id.as_str().cmp(id))
            .ok()
            .map(|i| &self.entries[i])
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Evaluates catalog entry `id` at a named assignment.
///
/// Every declared parameter must be assigned and no others.
pub fn evaluate(id: &str, params: &[(&str, i64)]) -> Result<CheckResult, IdentityError> {
    let desc = Catalog::global()
        .get(id)
        .ok_or_else(|| IdentityError::UnknownIdentity(id.to_string()))?;
    let bad = |reason: String| IdentityError::InadmissibleParams {
        id: id.to_string(),
        reason,
    };
    if let Some((name, _)) = params.iter().find(|(n, _)| !desc.params.iter().any(|p| p.name == *n)) {
        return Err(bad(format!("no parameter named {name}")));
    }
    let values = desc
        .params
        .iter()
        .map(|p| {
            params
                .iter()
                .find(|(n, _)| *n == p.name)
                .map(|&(_, v)| v)
                .ok_or_else(|| bad(format!("missing parameter {}", p.name)))
        })
        .collect::<Result<Vec<i64>, _>>()?;
    desc.check(SeqEngine::global(), &values)
}

/// Summaries of every entry in id order.
pub fn catalog_list() -> Vec<IdentitySummary> {
    Catalog::global().entries().iter().map(IdentityDescriptor::summary).collect()
}
