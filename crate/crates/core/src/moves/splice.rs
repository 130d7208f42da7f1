use crate::diagram::{Component, Pass};
use crate::group::Word;

/// A point on a walk: inside segment word `word` of `component`, after
/// `split` of its letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub component: usize,
    pub word: usize,
    pub split: usize,
}

#[derive(Debug, Clone)]
pub(crate) enum Item {
    Word(Word),
    Pass(Pass),
}

/// Material inserted at a point. At equal splits, lower `order` goes first.
#[derive(Debug, Clone)]
pub(crate) struct Splice {
    pub word: usize,
    pub split: usize,
    pub order: u8,
    pub items: Vec<Item>,
}

/// Rebuilds a component's walk with the given splices. Adjacent words
/// are multiplied together and an identity word is put between adjacent passes.
pub(crate) fn rebuild(c: &Component, mut splices: Vec<Splice>) -> Component {
    splices.sort_by_key(|s| (s.word, s.split, s.order));
    let mut stream: Vec<Item> = Vec::new();
    let mut it = splices.into_iter().peekable();
    for (k, w) in c.words.iter().enumerate() {
        let letters = w.letters();
        let mut from = 0;
        while let Some(s) = it.next_if(|s| s.word == k) {
            let at = s.split.min(letters.len());
            stream.push(Item::Word(Word::from_letters(letters[from..at].iter().copied())));
            from = at;
            stream.extend(s.items);
        }
        stream.push(Item::Word(Word::from_letters(letters[from..].iter().copied())));
        if let Some(p) = c.passes.get(k) {
            stream.push(Item::Pass(p.clone()));
        }
    }
    let mut words = vec![Word::identity()];
    let mut passes = Vec::new();
    for item in stream {
        match item {
            Item::Word(w) => {
                let last = words.last_mut().expect("nonempty");
                *last = last.mul(&w);
            }
            Item::Pass(p) => {
                passes.push(p);
                words.push(Word::identity());
            }
        }
    }
    Component { name: c.name.clone(), kind: c.kind, words, passes }
}

/// Removes the passes at the given positions, multiplying the surrounding
/// words together.
pub(crate) fn remove_passes(c: &Component, positions: &[usize]) -> Component {
    let mut words = vec![c.words[0].clone()];
    let mut passes = Vec::new();
    for (k, p) in c.passes.iter().enumerate() {
        if positions.contains(&k) {
            let last = words.last_mut().expect("nonempty");
            *last = last.mul(&c.words[k + 1]);
        } else {
            passes.push(p.clone());
            words.push(c.words[k + 1].clone());
        }
    }
    Component { name: c.name.clone(), kind: c.kind, words, passes }
}
