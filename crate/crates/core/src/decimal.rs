//! Serde helpers writing big integers as decimal strings.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub fn serialize<T: Display, S: Serializer>(value: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
where
    T: FromStr,
    T::Err: Display,
    D: Deserializer<'de>,
{
    let s = String::deserialize(d)?;
    s.parse().map_err(D::Error::custom)
}

pub mod map {
    use super::*;

    pub fn serialize<K, T, S>(map: &BTreeMap<K, T>, s: S) -> Result<S::Ok, S::Error>
    where
        K: Serialize + Ord,
        T: Display,
        S: Serializer,
    {
        let as_strings: BTreeMap<&K, String> = map.iter().map(|(k, v)| (k, v.to_string())).collect();
        as_strings.serialize(s)
    }

    pub fn deserialize<'de, K, T, D>(d: D) -> Result<BTreeMap<K, T>, D::Error>
    where
        K: Deserialize<'de> + Ord,
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        BTreeMap::<K, String>::deserialize(d)?
            .into_iter()
            .map(|(k, v)| v.parse().map(|v| (k, v)).map_err(D::Error::custom))
            .collect()
    }
}

pub mod option_map {
    use super::*;

    pub fn serialize<K, T, S>(map: &Option<BTreeMap<K, T>>, s: S) -> Result<S::Ok, S::Error>
    where
        K: Serialize + Ord,
        T: Display,
        S: Serializer,
    {
        match map {
            Some(m) => super::map::serialize(m, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, K, T, D>(d: D) -> Result<Option<BTreeMap<K, T>>, D::Error>
    where
        K: Deserialize<'de> + Ord,
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        Option::<BTreeMap<K, String>>::deserialize(d)?
            .map(|m| {
                m.into_iter()
                    .map(|(k, v)| v.parse().map(|v| (k, v)).map_err(D::Error::custom))
                    .collect()
            })
            .transpose()
    }
}
