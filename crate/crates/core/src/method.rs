//! Uniform dispatch over every method variant, with its relatedness conversion.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{MeasureError, ParseMethodError};
use crate::measures::adjacent::{lod_jaccard, lod_overlap, wlm_distance};
use crate::measures::asrmp::{asrmp, psi, AsrmpVariant};
use crate::measures::exclusivity::excl_relatedness;
use crate::measures::ic::{icm, IcWeightKind, IcWeights};
use crate::measures::pattern::{ldsd, ldsdgn, pldsd, LdsdVariant, LdsdgnVariant};
use crate::measures::proximity::{proximity, PredicateWeights, ProxParams};
use crate::measures::reword::{reword, RewordStrategy};
use crate::measures::LogBase;
use crate::store::{TermId, TripleStore};

/// How a raw method value becomes a relatedness score.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conversion {
    /// 1 − v, for distances in [0, 1]
    OneMinus,
    /// 1 / (1 + v), for unbounded distances; +inf maps to 0
    Inverse,
    Identity,
}

pub fn to_relatedness(v: f64, kind: Conversion) -> Result<f64, MeasureError> {
    match kind {
        Conversion::OneMinus => {
            if !(0.0..=1.0).contains(&v) {
                return Err(MeasureError::ConversionDomain(v));
            }
            Ok(1.0 - v)
        }
        Conversion::Inverse => {
            if v == f64::INFINITY {
                Ok(0.0)
            } else {
                Ok(1.0 / (1.0 + v))
            }
        }
        Conversion::Identity => Ok(v),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Wlm,
    LodOverlap,
    LodJaccard,
    Ldsd(LdsdVariant),
    Ldsdgn(LdsdgnVariant),
    Pldsd,
    Icm(IcWeightKind),
    Reword(RewordStrategy),
    Exclm,
    Asrmp(AsrmpVariant),
    Proxm,
}

const ALL: [Method; 23] = [
    Method::Wlm,
    Method::LodOverlap,
    Method::LodJaccard,
    Method::Ldsd(LdsdVariant::Dw),
    Method::Ldsd(LdsdVariant::Iw),
    Method::Ldsd(LdsdVariant::Cw),
    Method::Ldsdgn(LdsdgnVariant::Alpha),
    Method::Ldsdgn(LdsdgnVariant::Beta),
    Method::Ldsdgn(LdsdgnVariant::Gamma),
    Method::Pldsd,
    Method::Icm(IcWeightKind::JointIc),
    Method::Icm(IcWeightKind::CombIc),
    Method::Icm(IcWeightKind::IcPmi),
    Method::Reword(RewordStrategy::Incoming),
    Method::Reword(RewordStrategy::Outgoing),
    Method::Reword(RewordStrategy::Average),
    Method::Reword(RewordStrategy::Mip),
    Method::Reword(RewordStrategy::Full),
    Method::Exclm,
    Method::Asrmp(AsrmpVariant::A),
    Method::Asrmp(AsrmpVariant::B),
    Method::Asrmp(AsrmpVariant::C),
    Method::Proxm,
];

impl Method {
    /// Every variant, in a fixed order.
    pub fn all() -> &'static [Method] {
        &ALL
    }

    pub fn name(self) -> &'static str {
        match self {
            Method::Wlm => "wlm",
            Method::LodOverlap => "lod-overlap",
            Method::LodJaccard => "lod-jaccard",
            Method::Ldsd(LdsdVariant::Dw) => "ldsd-dw",
            Method::Ldsd(LdsdVariant::Iw) => "ldsd-iw",
            Method::Ldsd(LdsdVariant::Cw) => "ldsd-cw",
            Method::Ldsdgn(LdsdgnVariant::Alpha) => "ldsdgn-alpha",
            Method::Ldsdgn(LdsdgnVariant::Beta) => "ldsdgn-beta",
            Method::Ldsdgn(LdsdgnVariant::Gamma) => "ldsdgn-gamma",
            Method::Pldsd => "pldsd",
            Method::Icm(IcWeightKind::JointIc) => "icm-joint",
            Method::Icm(IcWeightKind::CombIc) => "icm-comb",
            Method::Icm(IcWeightKind::IcPmi) => "icm-pmi",
            Method::Reword(RewordStrategy::Incoming) => "reword-incoming",
            Method::Reword(RewordStrategy::Outgoing) => "reword-outgoing",
            Method::Reword(RewordStrategy::Average) => "reword-average",
            Method::Reword(RewordStrategy::Mip) => "reword-mip",
            Method::Reword(RewordStrategy::Full) => "reword-full",
            Method::Exclm => "exclm",
            Method::Asrmp(AsrmpVariant::A) => "asrmp-a",
            Method::Asrmp(AsrmpVariant::B) => "asrmp-b",
            Method::Asrmp(AsrmpVariant::C) => "asrmp-c",
            Method::Proxm => "proxm",
        }
    }

    pub fn conversion(self) -> Conversion {
        match self {
            Method::Wlm => Conversion::Inverse,
            Method::Ldsd(_) | Method::Ldsdgn(_) => Conversion::OneMinus,
            _ => Conversion::Identity,
        }
    }

    /// True for methods whose value depends on argument order.
    pub fn is_asymmetric(self) -> bool {
        matches!(self, Method::Ldsd(_) | Method::Ldsdgn(LdsdgnVariant::Alpha))
    }

    /// Methods whose relatedness is null beyond undirected distance 2.
    pub fn is_local(self) -> bool {
        matches!(
            self,
            Method::Wlm
                | Method::LodOverlap
                | Method::LodJaccard
                | Method::Ldsd(_)
                | Method::Ldsdgn(_)
        )
    }

    /// Methods that enumerate paths between the pair.
    pub fn uses_paths(self) -> bool {
        matches!(
            self,
            Method::Pldsd
                | Method::Icm(_)
                | Method::Reword(RewordStrategy::Mip | RewordStrategy::Full)
                | Method::Exclm
                | Method::Asrmp(_)
                | Method::Proxm
        )
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = ParseMethodError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ALL.iter()
            .copied()
            .find(|m| m.name() == s)
            .ok_or_else(|| ParseMethodError(s.to_string()))
    }
}

impl Serialize for Method {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Method {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let name = String::deserialize(d)?;
        name.parse().map_err(serde::de::Error::custom)
    }
}

/// Parameters shared by all methods.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct MethodParams {
    /// Max undirected path length for path-based methods.
    pub h: usize,
    /// Directed path length for ASRMP.
    pub m: usize,
    /// Paths kept by ExclM.
    pub k: usize,
    /// ExclM length damping.
    pub alpha: f64,
    /// Base for IC, PF-ITF and predicate weights.
    pub ic_log_base: LogBase,
    /// Base for the LDSD family's 1 + log(count) terms.
    pub pattern_log_base: LogBase,
    /// ProxM predicate weights keyed by IRI; predicate IC when absent.
    pub prox_weights: Option<BTreeMap<String, f64>>,
    /// Average ASRMP over both directions.
    pub symmetrize_asrmp: bool,
}

impl Default for MethodParams {
    fn default() -> Self {
        Self {
            h: 2,
            m: 2,
            k: 5,
            alpha: 0.25,
            ic_log_base: LogBase::TEN,
            pattern_log_base: LogBase::E,
            prox_weights: None,
            symmetrize_asrmp: true,
        }
    }
}

impl MethodParams {
    pub fn validate(&self) -> Result<(), MeasureError> {
        if self.h == 0 || self.m == 0 {
            return Err(MeasureError::InvalidBound);
        }
        if self.k == 0 {
            return Err(MeasureError::InvalidK);
        }
        if !(self.alpha > 0.0 && self.alpha <= 1.0) {
            return Err(MeasureError::InvalidAlpha(self.alpha));
        }
        Ok(())
    }
}

/// Scores pairs with any method over one store, caching graph-wide weights.
pub struct Scorer<'a> {
    store: &'a TripleStore,
    params: MethodParams,
    ic: [OnceLock<IcWeights>; 3],
    prox: OnceLock<ProxParams>,
}

impl<'a> Scorer<'a> {
    pub fn new(store: &'a TripleStore, params: MethodParams) -> Self {
        Self {
            store,
            params,
            ic: Default::default(),
            prox: OnceLock::new(),
        }
    }

    pub fn store(&self) -> &'a TripleStore {
        self.store
    }

    pub fn params(&self) -> &MethodParams {
        &self.params
    }

    pub fn ic_weights(&self, kind: IcWeightKind) -> &IcWeights {
        let slot = match kind {
            IcWeightKind::JointIc => 0,
            IcWeightKind::CombIc => 1,
            IcWeightKind::IcPmi => 2,
        };
        self.ic[slot].get_or_init(|| IcWeights::new(self.store, kind, self.params.ic_log_base))
    }

    pub fn prox_params(&self) -> &ProxParams {
        self.prox.get_or_init(|| {
            let weights = match &self.params.prox_weights {
                Some(table) => PredicateWeights::from_table(self.store, table),
                None => PredicateWeights::predicate_ic(self.store, self.params.ic_log_base),
            };
            ProxParams::new(self.store, self.params.h, weights)
        })
    }

    /// The method's own value, before conversion.
    pub fn raw(&self, method: Method, a: TermId, b: TermId) -> Result<f64, MeasureError> {
        let s = self.store;
        let p = &self.params;
        p.validate()?;
        match method {
            Method::Wlm => Ok(wlm_distance(s, a, b)),
            Method::LodOverlap => Ok(lod_overlap(s, a, b)),
            Method::LodJaccard => Ok(lod_jaccard(s, a, b)),
            Method::Ldsd(v) => Ok(ldsd(s, v, a, b, p.pattern_log_base)),
            Method::Ldsdgn(v) => Ok(ldsdgn(s, v, a, b, p.pattern_log_base)),
            Method::Pldsd => pldsd(s, a, b, p.h, p.pattern_log_base),
            Method::Icm(kind) => icm(s, self.ic_weights(kind), a, b, p.h),
            Method::Reword(strategy) => reword(s, strategy, a, b, p.h, p.ic_log_base),
            Method::Exclm => excl_relatedness(s, a, b, p.h, p.k, p.alpha),
            Method::Asrmp(v) if p.symmetrize_asrmp => psi(s, v, p.m, a, b),
            Method::Asrmp(v) => asrmp(s, v, p.m, a, b),
            Method::Proxm => proximity(s, a, b, self.prox_params()),
        }
    }

    /// Relatedness after the method's conversion.
    pub fn score(&self, method: Method, a: TermId, b: TermId) -> Result<f64, MeasureError> {
        to_relatedness(self.raw(method, a, b)?, method.conversion())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture::Fixture;

    #[test]
    fn names_round_trip() {
        for &m in Method::all() {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert_eq!(Method::all().len(), 23);
        assert!("ldsd".parse::<Method>().is_err());
    }

    #[test]
    fn conversions() {
        assert_eq!(to_relatedness(0.25, Conversion::OneMinus).unwrap(), 0.75);
        assert_eq!(
            to_relatedness(f64::INFINITY, Conversion::Inverse).unwrap(),
            0.0
        );
        let v = to_relatedness(0.7774, Conversion::Inverse).unwrap();
        assert!((v - 0.5626).abs() < 5e-5);
        assert_eq!(
            to_relatedness(1.5, Conversion::OneMinus),
            Err(MeasureError::ConversionDomain(1.5))
        );
        assert_eq!(to_relatedness(-3.0, Conversion::Identity).unwrap(), -3.0);
    }

    #[test]
    fn every_method_scores_the_fixture_pair() {
        let f = Fixture::new();
        let scorer = Scorer::new(&f.store, MethodParams::default());
        for &m in Method::all() {
            let v = scorer.score(m, f.r("ra"), f.r("rb")).unwrap();
            assert!(v.is_finite() && v >= 0.0, "{m}: {v}");
        }
    }

    #[test]
    fn wlm_identity_is_one() {
        let f = Fixture::new();
        let scorer = Scorer::new(&f.store, MethodParams::default());
        assert_eq!(
            scorer.score(Method::Wlm, f.r("ra"), f.r("ra")).unwrap(),
            1.0
        );
    }

    #[test]
    fn params_serde_round_trip() {
        let p = MethodParams {
            h: 3,
            prox_weights: Some([("http://x/p".to_string(), 0.5)].into_iter().collect()),
            ..MethodParams::default()
        };
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<MethodParams>(&json).unwrap(), p);
    }
}
