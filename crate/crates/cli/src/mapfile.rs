//! The on-disk map format: a JSON document with a list of named maps, each a
//! list of breakpoint pairs. Every number is an exact fraction written as a
//! pair of decimal digit strings `[numerator, denominator]`, the sign on the
//! numerator, so arbitrary precision survives the round trip. Serialization
//! is canonical: reduced fractions, fixed key order, no whitespace.

use serde::{Deserialize, Serialize};

use plof::rational::Rational;
use plof::PLMap;

use crate::CmdError;

pub type FractionRepr = (String, String);
pub type BreakpointRepr = (FractionRepr, FractionRepr);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedMap {
    pub name: String,
    pub breakpoints: Vec<BreakpointRepr>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapFile {
    pub maps: Vec<NamedMap>,
}

pub fn fraction_repr(r: &Rational) -> FractionRepr {
    (r.numer().to_string(), r.denom().to_string())
}

pub fn parse_fraction(repr: &FractionRepr) -> Result<Rational, CmdError> {
    let (numer_str, denom_str) = repr;
    let numer_digits = numer_str.strip_prefix('-').unwrap_or(numer_str);
    if numer_digits.is_empty() || !numer_digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(CmdError::Parse(format!(
            "malformed numerator '{}'",
            numer_str
        )));
    }
    if denom_str.is_empty() || !denom_str.bytes().all(|b| b.is_ascii_digit()) {
        return Err(CmdError::Parse(format!(
            "malformed denominator '{}'",
            denom_str
        )));
    }
    let numer: num_bigint::BigInt = numer_str.parse().unwrap();
    let denom: num_bigint::BigInt = denom_str.parse().unwrap();
    if denom == 0.into() {
        return Err(CmdError::Parse("zero denominator".into()));
    }
    Ok(Rational::new(numer, denom))
}

impl MapFile {
    pub fn parse(text: &str) -> Result<MapFile, CmdError> {
        serde_json::from_str(text).map_err(|e| CmdError::Parse(format!("bad map file: {}", e)))
    }

    /// Canonical byte-stable serialization.
    pub fn serialize(&self) -> String {
        serde_json::to_string(self).expect("map files always serialize")
    }

    pub fn from_named(maps: &[(String, PLMap)]) -> MapFile {
        MapFile {
            maps: maps
                .iter()
                .map(|(name, m)| NamedMap {
                    name: name.clone(),
                    breakpoints: m
                        .breakpoints()
                        .iter()
                        .map(|(x, y)| (fraction_repr(x), fraction_repr(y)))
                        .collect(),
                })
                .collect(),
        }
    }

    /// Realizes every named map, in file order.
    pub fn realize_all(&self) -> Result<Vec<(String, PLMap)>, CmdError> {
        self.maps
            .iter()
            .map(|nm| {
                let points = nm
                    .breakpoints
                    .iter()
                    .map(|(x, y)| Ok((parse_fraction(x)?, parse_fraction(y)?)))
                    .collect::<Result<Vec<_>, CmdError>>()?;
                let map = PLMap::make(points)
                    .map_err(|e| CmdError::Invalid(format!("map '{}': {}", nm.name, e)))?;
                Ok((nm.name.clone(), map))
            })
            .collect()
    }

    /// Looks up maps by name, in the requested order.
    pub fn realize_named(&self, names: &[String]) -> Result<Vec<(String, PLMap)>, CmdError> {
        let all = self.realize_all()?;
        names
            .iter()
            .map(|n| {
                all.iter()
                    .find(|(name, _)| name == n)
                    .cloned()
                    .ok_or_else(|| CmdError::Invalid(format!("no map named '{}'", n)))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use plof::rational::rat;
    use plof::thompson::{f0, f1};

    #[test]
    fn round_trip_is_identity_on_canonical_forms() {
        let file = MapFile::from_named(&[("f0".into(), f0()), ("f1".into(), f1())]);
        let text = file.serialize();
        let back = MapFile::parse(&text).unwrap();
        assert_eq!(back, file);
        let maps = back.realize_all().unwrap();
        assert_eq!(maps[0].1, f0());
        assert_eq!(maps[1].1, f1());
        // serialization is byte-stable
        assert_eq!(back.serialize(), text);
    }

    #[test]
    fn unreduced_fractions_parse_to_canonical_maps() {
        let text = r#"{"maps":[{"name":"id","breakpoints":[[["0","5"],["0","1"]],[["2","2"],["4","4"]]]}]}"#;
        let file = MapFile::parse(text).unwrap();
        let maps = file.realize_all().unwrap();
        assert_eq!(maps[0].1, PLMap::identity());
    }

    #[test]
    fn malformed_fractions_are_parse_errors() {
        for bad in [
            r#"{"maps":[{"name":"x","breakpoints":[[["0","1"],["0","1"]],[["1","0"],["1","1"]]]}]}"#,
            r#"{"maps":[{"name":"x","breakpoints":[[["0","1"],["0","1"]],[["a","2"],["1","1"]]]}]}"#,
            r#"{"maps":[{"name":"x","breakpoints":[[["0","1"],["0","1"]],[["1","-2"],["1","1"]]]}]}"#,
        ] {
            let file = MapFile::parse(bad).unwrap();
            let err = file.realize_all().unwrap_err();
            assert_eq!(err.exit_code(), 2, "{:?}", err);
        }
        // not JSON at all
        assert_eq!(MapFile::parse("{").unwrap_err().exit_code(), 2);
    }

    #[test]
    fn invalid_maps_are_semantic_errors() {
        let text = r#"{"maps":[{"name":"x","breakpoints":[[["0","1"],["0","1"]],[["1","2"],["1","4"]],[["1","2"],["3","4"]],[["1","1"],["1","1"]]]}]}"#;
        let file = MapFile::parse(text).unwrap();
        let err = file.realize_all().unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn named_lookup() {
        let file = MapFile::from_named(&[("a".into(), f0()), ("b".into(), f1())]);
        let got = file.realize_named(&["b".into(), "a".into()]).unwrap();
        assert_eq!(got[0].0, "b");
        assert_eq!(got[1].1, f0());
        assert_eq!(
            file.realize_named(&["c".into()]).unwrap_err().exit_code(),
            3
        );
    }

    #[test]
    fn negative_numerators_round_trip() {
        // not meaningful for maps on [0,1], but the fraction format itself
        // carries signs on the numerator
        let r = rat(-3, 8);
        let repr = fraction_repr(&r);
        assert_eq!(repr, ("-3".to_string(), "8".to_string()));
        assert_eq!(parse_fraction(&repr).unwrap(), r);
    }
}
