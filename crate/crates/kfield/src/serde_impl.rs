//! JSON form: an array of eight "p/q" strings in basis order.
//! A single shorthand string (e.g. `"zeta"`) is also accepted on input.

use std::fmt;

use num_rational::BigRational;
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Scalar;

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(8))?;
        for c in self.coord_strings() {
            seq.serialize_element(&c)?;
        }
        seq.end()
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = n.trim().parse().ok()?;
            let d: num_bigint::BigInt = d.trim().parse().ok()?;
            if d == 0.into() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

struct ScalarVisitor;

impl<'de> Visitor<'de> for ScalarVisitor {
    type Value = Scalar;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "an array of 8 rational strings or a shorthand scalar string")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Scalar, E> {
        v.parse().map_err(E::custom)
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Scalar, E> {
        Ok(Scalar::from_i64(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Scalar, E> {
        i64::try_from(v).map(Scalar::from_i64).map_err(E::custom)
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Scalar, A::Error> {
        let mut coords: Vec<BigRational> = Vec::with_capacity(8);
        while let Some(s) = seq.next_element::<String>()? {
            let q = parse_rational(&s)
                .ok_or_else(|| de::Error::custom(format!("bad rational coordinate {s:?}")))?;
            coords.push(q);
        }
        let arr: [BigRational; 8] = coords
            .try_into()
            .map_err(|v: Vec<_>| de::Error::invalid_length(v.len(), &"8 coordinates"))?;
        Ok(Scalar::from_coords(arr))
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(ScalarVisitor)
    }
}
