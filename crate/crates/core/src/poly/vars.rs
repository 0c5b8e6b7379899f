use std::collections::HashMap;

use super::PolyError;

/// Ordered variable names. Index 0 is the most significant variable for
/// lex-type orders.
#[derive(Clone, Debug, Default)]
pub struct VariableTable {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VariableTable {
    pub fn new<I, S>(names: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut table = Self::default();
        for name in names {
            let name = name.into();
            if name.is_empty() {
                return Err(PolyError::InvalidOrder("empty variable name".into()));
            }
            if table
                .index
                .insert(name.clone(), table.names.len())
                .is_some()
            {
                return Err(PolyError::DuplicateVariable(name));
            }
            table.names.push(name);
        }
        Ok(table)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Longest variable name that is a prefix of `s`.
    pub(crate) fn longest_prefix(&self, s: &str) -> Option<(usize, usize)> {
        self.names
            .iter()
            .enumerate()
            .filter(|(_, n)| s.starts_with(n.as_str()))
            .max_by_key(|(_, n)| n.len())
            .map(|(i, n)| (i, n.len()))
    }
}

impl PartialEq for VariableTable {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for VariableTable {}
