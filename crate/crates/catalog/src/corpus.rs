//! Built-in algebra fixtures.

use crate::format;
use crate::load::Loaded;
use crate::CatalogError;

pub struct Entry {
    pub name: &'static str,
    pub text: &'static str,
    /// Factors, when the entry presents a tensor product.
    pub tensor_of: Option<(&'static str, &'static str)>,
}

macro_rules! entry {
    ($name:literal) => {
        entry!($name, None)
    };
    ($name:literal, $tensor:expr) => {
        Entry {
            name: $name,
            text: include_str!(concat!("../corpus/", $name, ".alg")),
            tensor_of: $tensor,
        }
    };
}

pub const ENTRIES: [Entry; 10] = [
    entry!("a3"),
    entry!("aus"),
    entry!("k"),
    entry!("k2"),
    entry!("k2k2", Some(("k2", "k2"))),
    entry!("k2table"),
    entry!("k3"),
    entry!("k4"),
    entry!("ka2"),
    entry!("ka2k2", Some(("ka2", "k2"))),
];

/// Ordered pairs whose tensor product the Künneth check covers.
pub const TENSOR_PAIRS: [(&str, &str); 7] = [
    ("k2", "k2"),
    ("ka2", "k2"),
    ("k2", "ka2"),
    ("ka2", "ka2"),
    ("k3", "k2"),
    ("a3", "k2"),
    ("aus", "k"),
];

pub fn entry(name: &str) -> Option<&'static Entry> {
    ENTRIES.iter().find(|e| e.name == name)
}

/// Parses and validates a built-in entry over the given modulus.
pub fn load(name: &str, modulus: u32) -> Result<Loaded, CatalogError> {
    let e = entry(name).ok_or_else(|| CatalogError::Input(format!("no corpus entry `{name}`")))?;
    let doc = format::parse(e.text)?;
    Loaded::new(name, doc, modulus)
}
