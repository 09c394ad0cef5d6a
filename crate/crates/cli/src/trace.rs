//! JSON form of an extraction trace: every rational as a digit-string pair,
//! maps in the map-file format, one entry per pipeline step, and the final
//! certificate.

use serde::Serialize;

use plof::extraction::{ExtractionTrace, GermExtraction, StepRecord};
use plof::thompson::FCertificate;
use plof::{Interval, OrbitalInfo, PLMap};

use crate::mapfile::{fraction_repr, BreakpointRepr, FractionRepr, MapFile};

#[derive(Serialize)]
pub struct TraceFile {
    pub witness: String,
    pub orbital: [FractionRepr; 2],
    pub endpoint: FractionRepr,
    pub seed: SeedRepr,
    pub steps: Vec<StepRepr>,
    pub final_pair: MapFile,
    pub certificate: CertificateRepr,
}

#[derive(Serialize)]
pub struct SeedRepr {
    pub orbital: [FractionRepr; 2],
    pub endpoint: FractionRepr,
    pub sign: i8,
    pub slope: FractionRepr,
    pub support_edge: FractionRepr,
    pub affine_from: FractionRepr,
    pub inner_power: u32,
    pub carried_edge: FractionRepr,
    pub conj_affine_from: FractionRepr,
    pub outer_power: u32,
    pub threshold: u32,
    pub exponent: u32,
    pub conjugator: Option<String>,
    pub pair: MapFile,
}

#[derive(Serialize)]
pub struct StepRepr {
    pub step: u8,
    pub note: String,
    pub threshold: Option<u32>,
    pub distinguished: [FractionRepr; 2],
    pub pair: MapFile,
    pub orbitals: Vec<OrbitalRepr>,
}

#[derive(Serialize)]
pub struct OrbitalRepr {
    pub interval: [FractionRepr; 2],
    pub orbital_type: [u8; 2],
    pub pure: bool,
    pub empty: bool,
    pub sigma: Option<[i8; 2]>,
}

#[derive(Serialize)]
pub struct CertificateRepr {
    pub verdict: String,
    pub failing_relation: Option<String>,
    pub commutator_witness: Option<Vec<BreakpointRepr>>,
}

fn interval_repr(iv: &Interval) -> [FractionRepr; 2] {
    [fraction_repr(iv.lo()), fraction_repr(iv.hi())]
}

fn breakpoints_repr(m: &PLMap) -> Vec<BreakpointRepr> {
    m.breakpoints()
        .iter()
        .map(|(x, y)| (fraction_repr(x), fraction_repr(y)))
        .collect()
}

fn pair_file(pair: &(PLMap, PLMap)) -> MapFile {
    MapFile::from_named(&[
        ("g0".to_string(), pair.0.clone()),
        ("g1".to_string(), pair.1.clone()),
    ])
}

fn orbital_repr(o: &OrbitalInfo) -> OrbitalRepr {
    OrbitalRepr {
        interval: interval_repr(&o.interval),
        orbital_type: [o.orbital_type.0, o.orbital_type.1],
        pure: o.pure,
        empty: o.empty,
        sigma: o.sigma.map(|(a, b)| [a, b]),
    }
}

fn seed_repr(s: &GermExtraction) -> SeedRepr {
    SeedRepr {
        orbital: interval_repr(&s.orbital),
        endpoint: fraction_repr(&s.endpoint),
        sign: s.sign,
        slope: fraction_repr(&s.slope),
        support_edge: fraction_repr(&s.support_edge),
        affine_from: fraction_repr(&s.affine_from),
        inner_power: s.inner_power,
        carried_edge: fraction_repr(&s.carried_edge),
        conj_affine_from: fraction_repr(&s.conj_affine_from),
        outer_power: s.outer_power,
        threshold: s.threshold,
        exponent: s.exponent,
        conjugator: s.conjugator.as_ref().map(|w| w.to_string()),
        pair: pair_file(&s.pair),
    }
}

fn step_repr(s: &StepRecord) -> StepRepr {
    StepRepr {
        step: s.step,
        note: s.note.clone(),
        threshold: s.threshold,
        distinguished: interval_repr(&s.distinguished),
        pair: pair_file(&s.pair),
        orbitals: s.orbitals.iter().map(orbital_repr).collect(),
    }
}

fn certificate_repr(c: &FCertificate) -> CertificateRepr {
    CertificateRepr {
        verdict: c.verdict.to_string(),
        failing_relation: c.failing_relation.map(|t| t.to_string()),
        commutator_witness: c.commutator_witness.as_ref().map(breakpoints_repr),
    }
}

impl TraceFile {
    pub fn from_trace(tr: &ExtractionTrace) -> TraceFile {
        TraceFile {
            witness: tr.witness.to_string(),
            orbital: interval_repr(&tr.orbital),
            endpoint: fraction_repr(&tr.endpoint),
            seed: seed_repr(&tr.seed),
            steps: tr.steps.iter().map(step_repr).collect(),
            final_pair: pair_file(&tr.final_pair),
            certificate: certificate_repr(&tr.certificate),
        }
    }

    pub fn serialize(&self) -> String {
        serde_json::to_string_pretty(self).expect("traces always serialize")
    }
}
