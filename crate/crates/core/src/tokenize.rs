//! Lexical feature extraction: lowercasing plus the four tokenization
//! schemes used by the classifiers (word tokens, alphanumeric character
//! n-grams, non-space character n-grams, and word n-grams).

use serde::{Deserialize, Serialize};

/// Which token stream a vectorizer consumes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "scheme")]
pub enum TokenizerSpec {
    /// Word tokens (runs of two or more word characters).
    #[serde(rename = "WORD_UNIGRAM")]
    WordUnigram,
    /// Character n-grams over the text with non-alphanumerics mapped to spaces.
    #[serde(rename = "CHAR_ALNUM")]
    CharAlnum { n: usize },
    /// Character n-grams over the text with only whitespace collapsed,
    /// keeping `#`, `@`, and punctuation.
    #[serde(rename = "CHAR_NONSPACE")]
    CharNonspace { n: usize },
    /// Word n-grams for every length in `n_min..=n_max`, joined by spaces.
    #[serde(rename = "WORD_NGRAM")]
    WordNgram { n_min: usize, n_max: usize },
}

impl TokenizerSpec {
    /// Tokenize raw text: normalization happens here, so callers can pass
    /// tweets as loaded.
    pub fn tokens(&self, text: &str) -> Vec<String> {
        let lowered = normalize(text);
        match *self {
            TokenizerSpec::WordUnigram => word_tokens(&lowered),
            TokenizerSpec::CharAlnum { n } => char_ngrams_alnum(&lowered, n),
            TokenizerSpec::CharNonspace { n } => char_ngrams_nonspace(&lowered, n),
            TokenizerSpec::WordNgram { n_min, n_max } => word_ngrams(&lowered, n_min, n_max),
        }
    }
}

/// Lowercase with the default Unicode case mapping; nothing else changes.
pub fn normalize(text: &str) -> String {
    text.to_lowercase()
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

/// Maximal runs of two or more word characters (letters, digits, underscore),
/// in order of appearance. Single-character runs are dropped.
pub fn word_tokens(text: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    for c in text.chars() {
        if is_word_char(c) {
            current.push(c);
        } else if !current.is_empty() {
            if current.chars().count() >= 2 {
                tokens.push(std::mem::take(&mut current));
            } else {
                current.clear();
            }
        }
    }
    if current.chars().count() >= 2 {
        tokens.push(current);
    }
    tokens
}

fn windows_of(chars: &[char], n: usize) -> Vec<String> {
    if n == 0 || chars.len() < n {
        return Vec::new();
    }
    chars.windows(n).map(|w| w.iter().collect()).collect()
}

/// Character n-grams after mapping every non-alphanumeric character to a
/// space, collapsing space runs, and trimming. N-grams may span a single
/// interior space.
pub fn char_ngrams_alnum(text: &str, n: usize) -> Vec<String> {
    let mapped: String = text
        .chars()
        .map(|c| if c.is_alphanumeric() { c } else { ' ' })
        .collect();
    let collapsed = collapse_spaces(&mapped);
    windows_of(&collapsed, n)
}

/// Character n-grams after collapsing whitespace runs to a single space.
/// Punctuation, `#`, and `@` are kept as ordinary characters.
pub fn char_ngrams_nonspace(text: &str, n: usize) -> Vec<String> {
    let mapped: String = text
        .chars()
        .map(|c| if c.is_whitespace() { ' ' } else { c })
        .collect();
    let collapsed = collapse_spaces(&mapped);
    windows_of(&collapsed, n)
}

fn collapse_spaces(text: &str) -> Vec<char> {
    let mut out = Vec::with_capacity(text.len());
    let mut last_space = true; // leading spaces dropped
    for c in text.chars() {
        if c == ' ' {
            if !last_space {
                out.push(' ');
            }
            last_space = true;
        } else {
            out.push(c);
            last_space = false;
        }
    }
    while out.last() == Some(&' ') {
        out.pop();
    }
    out
}

/// All contiguous word n-grams for each length in `n_min..=n_max`, shorter
/// lengths first, each n-gram rendered with single-space joins.
pub fn word_ngrams(text: &str, n_min: usize, n_max: usize) -> Vec<String> {
    let words = word_tokens(text);
    let mut out = Vec::new();
    for n in n_min..=n_max {
        if n == 0 || words.len() < n {
            continue;
        }
        for w in words.windows(n) {
            out.push(w.join(" "));
        }
    }
    out
}
