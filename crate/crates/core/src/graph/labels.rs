use indexmap::IndexSet;

/// Bijection between external node labels and contiguous node indices.
///
/// Indices are handed out in first-insertion order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NodeLabelMap {
    labels: IndexSet<String>,
}

impl NodeLabelMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Labels `0..count` by their decimal index.
    pub fn numeric(count: usize) -> Self {
        Self {
            labels: (0..count).map(|i| i.to_string()).collect(),
        }
    }

    /// Returns the index of `label`, assigning the next free one if unseen.
    pub fn intern(&mut self, label: &str) -> usize {
        match self.labels.get_index_of(label) {
            Some(index) => index,
            None => self.labels.insert_full(label.to_owned()).0,
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.get_index_of(label)
    }

    pub fn label(&self, index: usize) -> Option<&str> {
        self.labels.get_index(index).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Labels in index order.
    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.labels.iter().map(String::as_str)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn first_appearance_order() {
        let mut map = NodeLabelMap::new();
        assert_eq!(map.intern("b"), 0);
        assert_eq!(map.intern("a"), 1);
        assert_eq!(map.intern("b"), 0);
        assert_eq!(map.len(), 2);
        assert_eq!(map.label(1), Some("a"));
        assert_eq!(map.label(2), None);
        assert_eq!(map.iter().collect::<Vec<_>>(), vec!["b", "a"]);
    }

    proptest! {
        #[test]
        fn round_trips_every_label(labels in proptest::collection::vec("[a-z0-9]{1,6}", 0..40)) {
            let mut map = NodeLabelMap::new();
            for label in &labels {
                let index = map.intern(label);
                prop_assert_eq!(map.label(index), Some(label.as_str()));
                prop_assert_eq!(map.index_of(label), Some(index));
            }
        }
    }
}
