use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Cartan–Killing family of an irreducible component.
///
/// Variant order is the canonical sort order of component strings
/// (`"B" < "BC" < "C"`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    BC,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::BC => "BC",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        }
    }

    /// Family of the dual root system.
    pub fn dual(self) -> Family {
        match self {
            Family::B => Family::C,
            Family::C => Family::B,
            f => f,
        }
    }

    fn parse(s: &str) -> Option<Family> {
        Some(match s {
            "A" => Family::A,
            "B" => Family::B,
            "BC" => Family::BC,
            "C" => Family::C,
            "D" => Family::D,
            "E" => Family::E,
            "F" => Family::F,
            "G" => Family::G,
            _ => return None,
        })
    }

    pub fn rank_is_valid(self, rank: usize) -> bool {
        match self {
            Family::A | Family::B | Family::C | Family::BC => rank >= 1,
            Family::D => rank >= 2,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentSpec {
    pub family: Family,
    pub rank: usize,
}

impl ComponentSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.rank_is_valid(rank) {
            return Err(Error::input(format!(
                "invalid rank {rank} for family {}",
                family.as_str()
            )));
        }
        Ok(ComponentSpec { family, rank })
    }
}

impl fmt::Display for ComponentSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.as_str(), self.rank)
    }
}

/// A (possibly reducible) root system type such as `A3xBC2`.
///
/// Components are kept sorted by family then rank, so the textual form is
/// canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemSpec {
    components: Vec<ComponentSpec>,
}

impl RootSystemSpec {
    pub fn new(mut components: Vec<ComponentSpec>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::input("root system type has no components"));
        }
        components.sort();
        Ok(RootSystemSpec { components })
    }

    pub fn components(&self) -> &[ComponentSpec] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    pub fn dual(&self) -> RootSystemSpec {
        let comps = self
            .components
            .iter()
            .map(|c| ComponentSpec { family: c.family.dual(), rank: c.rank })
            .collect();
        RootSystemSpec::new(comps).expect("nonempty")
    }

    /// Parses an optional type: the empty string means "no components".
    pub fn parse_optional(s: &str) -> Result<Option<RootSystemSpec>> {
        if s.trim().is_empty() {
            Ok(None)
        } else {
            s.parse().map(Some)
        }
    }
}

impl FromStr for RootSystemSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::input("empty root system type"));
        }
        let comps = s
            .split('x')
            .map(|part| {
                let split = part
                    .find(|c: char| c.is_ascii_digit())
                    .ok_or_else(|| Error::input(format!("missing rank in {part:?}")))?;
                let (fam, rank) = part.split_at(split);
                let family = Family::parse(fam)
                    .ok_or_else(|| Error::input(format!("unknown family {fam:?}")))?;
                let rank: usize = rank
                    .parse()
                    .map_err(|_| Error::input(format!("invalid rank in {part:?}")))?;
                ComponentSpec::new(family, rank)
            })
            .collect::<Result<Vec<_>>>()?;
        RootSystemSpec::new(comps)
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
