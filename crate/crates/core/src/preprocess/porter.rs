//! The original (1980) Porter suffix-stripping stemmer.
//!
//! [`stem`] runs steps 1a through 5b in order. The individual steps are
//! exposed through [`apply_step`] so each rule table can be checked on its
//! own reference examples.

use alloc::string::String;
use alloc::vec::Vec;

/// One rule group of the algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Step1a,
    Step1b,
    Step1c,
    Step2,
    Step3,
    Step4,
    Step5a,
    Step5b,
}

impl Step {
    pub const ALL: [Step; 8] = [
        Step::Step1a,
        Step::Step1b,
        Step::Step1c,
        Step::Step2,
        Step::Step3,
        Step::Step4,
        Step::Step5a,
        Step::Step5b,
    ];
}

/// Stems a lowercase ASCII word. Words of one or two letters, and words with
/// anything other than `a-z`, are returned unchanged.
pub fn stem(word: &str) -> String {
    if word.len() <= 2 || !word.bytes().all(|b| b.is_ascii_lowercase()) {
        return String::from(word);
    }
    let mut w = Word(word.as_bytes().to_vec());
    for step in Step::ALL {
        w.apply(step);
    }
    w.into_string()
}

/// Applies a single step to `word`, with the same input restrictions as [`stem`].
pub fn apply_step(word: &str, step: Step) -> String {
    if !word.bytes().all(|b| b.is_ascii_lowercase()) {
        return String::from(word);
    }
    let mut w = Word(word.as_bytes().to_vec());
    w.apply(step);
    w.into_string()
}

struct Word(Vec<u8>);

impl Word {
    fn into_string(self) -> String {
        // Only ASCII lowercase bytes ever enter or are written.
        String::from_utf8(self.0).expect("ascii")
    }

    fn apply(&mut self, step: Step) {
        match step {
            Step::Step1a => self.step1a(),
            Step::Step1b => self.step1b(),
            Step::Step1c => self.step1c(),
            Step::Step2 => self.step2(),
            Step::Step3 => self.step3(),
            Step::Step4 => self.step4(),
            Step::Step5a => self.step5a(),
            Step::Step5b => self.step5b(),
        }
    }

    fn is_consonant(&self, i: usize) -> bool {
        match self.0[i] {
            b'a' | b'e' | b'i' | b'o' | b'u' => false,
            b'y' => i == 0 || !self.is_consonant(i - 1),
            _ => true,
        }
    }

    /// Number of VC sequences in the first `len` letters.
    fn measure(&self, len: usize) -> usize {
        let mut i = 0;
        while i < len && self.is_consonant(i) {
            i += 1;
        }
        let mut m = 0;
        loop {
            while i < len && !self.is_consonant(i) {
                i += 1;
            }
            if i >= len {
                return m;
            }
            while i < len && self.is_consonant(i) {
                i += 1;
            }
            m += 1;
        }
    }

    fn has_vowel(&self, len: usize) -> bool {
        (0..len).any(|i| !self.is_consonant(i))
    }

    /// `*d`: the first `len` letters end in a double consonant.
    fn ends_double_consonant(&self, len: usize) -> bool {
        len >= 2 && self.0[len - 1] == self.0[len - 2] && self.is_consonant(len - 1)
    }

    /// `*o`: the first `len` letters end consonant-vowel-consonant, the last
    /// consonant not being w, x or y.
    fn ends_cvc(&self, len: usize) -> bool {
        len >= 3
            && self.is_consonant(len - 3)
            && !self.is_consonant(len - 2)
            && self.is_consonant(len - 1)
            && !matches!(self.0[len - 1], b'w' | b'x' | b'y')
    }

    fn ends_with(&self, suffix: &str) -> bool {
        self.0.ends_with(suffix.as_bytes())
    }

    fn stem_len(&self, suffix: &str) -> usize {
        self.0.len() - suffix.len()
    }

    fn replace_suffix(&mut self, suffix: &str, with: &str) {
        let keep = self.stem_len(suffix);
        self.0.truncate(keep);
        self.0.extend_from_slice(with.as_bytes());
    }

    /// Longest matching suffix wins; its replacement is applied only when the
    /// remaining stem has measure above `min_measure`.
    fn replace_longest(&mut self, rules: &[(&str, &str)], min_measure: usize) -> bool {
        let rule = rules
            .iter()
            .filter(|(suffix, _)| self.ends_with(suffix))
            .max_by_key(|(suffix, _)| suffix.len());
        match rule {
            Some(&(suffix, with)) => {
                if self.measure(self.stem_len(suffix)) > min_measure {
                    self.replace_suffix(suffix, with);
                }
                true
            }
            None => false,
        }
    }

    fn step1a(&mut self) {
        if self.ends_with("sses") {
            self.replace_suffix("sses", "ss");
        } else if self.ends_with("ies") {
            self.replace_suffix("ies", "i");
        } else if self.ends_with("ss") {
        } else if self.ends_with("s") {
            self.replace_suffix("s", "");
        }
    }

    fn step1b(&mut self) {
        if self.ends_with("eed") {
            if self.measure(self.stem_len("eed")) > 0 {
                self.replace_suffix("eed", "ee");
            }
            return;
        }
        let stripped = ["ed", "ing"]
            .into_iter()
            .find(|s| self.ends_with(s) && self.has_vowel(self.stem_len(s)));
        let Some(suffix) = stripped else { return };
        self.replace_suffix(suffix, "");

        if self.ends_with("at") || self.ends_with("bl") || self.ends_with("iz") {
            self.0.push(b'e');
        } else if self.ends_double_consonant(self.0.len())
            && !matches!(self.0.last(), Some(b'l' | b's' | b'z'))
        {
            self.0.pop();
        } else if self.measure(self.0.len()) == 1 && self.ends_cvc(self.0.len()) {
            self.0.push(b'e');
        }
    }

    fn step1c(&mut self) {
        if self.ends_with("y") && self.has_vowel(self.stem_len("y")) {
            self.replace_suffix("y", "i");
        }
    }

    fn step2(&mut self) {
        const RULES: [(&str, &str); 20] = [
            ("ational", "ate"),
            ("tional", "tion"),
            ("enci", "ence"),
            ("anci", "ance"),
            ("izer", "ize"),
            ("abli", "able"),
            ("alli", "al"),
            ("entli", "ent"),
            ("eli", "e"),
            ("ousli", "ous"),
            ("ization", "ize"),
            ("ation", "ate"),
            ("ator", "ate"),
            ("alism", "al"),
            ("iveness", "ive"),
            ("fulness", "ful"),
            ("ousness", "ous"),
            ("aliti", "al"),
            ("iviti", "ive"),
            ("biliti", "ble"),
        ];
        self.replace_longest(&RULES, 0);
    }

    fn step3(&mut self) {
        const RULES: [(&str, &str); 7] = [
            ("icate", "ic"),
            ("ative", ""),
            ("alize", "al"),
            ("iciti", "ic"),
            ("ical", "ic"),
            ("ful", ""),
            ("ness", ""),
        ];
        self.replace_longest(&RULES, 0);
    }

    fn step4(&mut self) {
        const RULES: [(&str, &str); 18] = [
            ("al", ""),
            ("ance", ""),
            ("ence", ""),
            ("er", ""),
            ("ic", ""),
            ("able", ""),
            ("ible", ""),
            ("ant", ""),
            ("ement", ""),
            ("ment", ""),
            ("ent", ""),
            ("ou", ""),
            ("ism", ""),
            ("ate", ""),
            ("iti", ""),
            ("ous", ""),
            ("ive", ""),
            ("ize", ""),
        ];
        // (m>1 and (*S or *T)) ION competes with the table on length.
        if self.ends_with("ion") {
            let len = self.stem_len("ion");
            if len > 0 && matches!(self.0[len - 1], b's' | b't') && self.measure(len) > 1 {
                self.0.truncate(len);
            }
            return;
        }
        self.replace_longest(&RULES, 1);
    }

    fn step5a(&mut self) {
        if !self.ends_with("e") {
            return;
        }
        let len = self.stem_len("e");
        let m = self.measure(len);
        if m > 1 || (m == 1 && !self.ends_cvc(len)) {
            self.0.truncate(len);
        }
    }

    fn step5b(&mut self) {
        let len = self.0.len();
        if self.measure(len) > 1 && self.ends_double_consonant(len) && self.ends_with("l") {
            self.0.pop();
        }
    }
}
