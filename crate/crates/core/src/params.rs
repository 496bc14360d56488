//! Small ordered name → value map used by metric and homomorphism family
//! instantiation and by the search module.

#[derive(Clone, Debug, Default)]
pub struct Params<S> {
    entries: Vec<(String, S)>,
}

impl<S: Clone> Params<S> {
    pub fn new(entries: impl IntoIterator<Item = (impl Into<String>, S)>) -> Self {
        Params {
            entries: entries.into_iter().map(|(k, v)| (k.into(), v)).collect(),
        }
    }

    pub fn get(&self, name: &str) -> Option<&S> {
        self.entries
            .iter()
            .find(|(k, _)| k == name)
            .map(|(_, v)| v)
    }

    pub fn set(&mut self, name: impl Into<String>, value: S) {
        let name = name.into();
        if let Some(slot) = self.entries.iter_mut().find(|(k, _)| *k == name) {
            slot.1 = value;
        } else {
            self.entries.push((name, value));
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &S)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl<S: Clone> FromIterator<(String, S)> for Params<S> {
    fn from_iter<T: IntoIterator<Item = (String, S)>>(iter: T) -> Self {
        Params {
            entries: iter.into_iter().collect(),
        }
    }
}
