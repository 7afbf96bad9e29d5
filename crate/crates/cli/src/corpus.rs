//! Ring files shipped with the binary.

use crate::parse::{parse_ring, RingFile};

#[derive(Clone, Copy, Debug)]
pub struct Entry {
    pub name: &'static str,
    pub text: &'static str,
    /// Too slow for the fitted Hilbert coefficients at desk scale; used only
    /// by checks that need no fits.
    pub heavy: bool,
}

macro_rules! entry {
    ($name:literal, $heavy:expr) => {
        Entry { name: $name, text: include_str!(concat!("../../../corpus/", $name, ".ring")), heavy: $heavy }
    };
}

pub const CORPUS: &[Entry] = &[
    entry!("example_d3", false),
    entry!("example_d4", true),
    entry!("regular", false),
    entry!("hypersurface", false),
    entry!("three_lines", false),
    entry!("embedded_line", false),
    entry!("twoplanes", false),
    entry!("quartic", false),
    entry!("twoplanes_embedded", false),
];

pub fn find(name: &str) -> Option<&'static Entry> {
    let name = name.strip_suffix(".ring").unwrap_or(name);
    CORPUS.iter().find(|e| e.name == name)
}

/// Parse a shipped ring file; panics only if the shipped text is invalid.
pub fn load(name: &str) -> RingFile {
    let e = find(name).unwrap_or_else(|| panic!("no corpus entry {name}"));
    parse_ring(e.text, None).unwrap_or_else(|err| panic!("corpus entry {name}: {err}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_parses() {
        for e in CORPUS {
            let rf = load(e.name);
            assert!(rf.defining_ideal().is_ok(), "{}", e.name);
        }
        assert!(find("twoplanes.ring").is_some());
        assert!(find("nope").is_none());
    }
}
