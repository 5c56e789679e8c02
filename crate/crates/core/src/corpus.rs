//! Corpus loading, validation, filtering, and merging.
//!
//! Two input corpora are supported: the hierarchical offensive-language
//! training data (tab-separated, five columns, literal `NULL` for absent
//! labels) and the hate-speech corpus used for augmentation (CSV with a
//! binary `HS` flag). Test sets ship tweets and gold labels in separate
//! files and are joined on id.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The three classification tasks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Task {
    A,
    B,
    C,
}

impl Task {
    /// Valid labels for the task, in the fixed (lexicographic) class order
    /// used for tie-breaking everywhere.
    pub fn label_set(self) -> &'static [&'static str] {
        match self {
            Task::A => &["NOT", "OFF"],
            Task::B => &["TIN", "UNT"],
            Task::C => &["GRP", "IND", "OTH"],
        }
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Task::A => write!(f, "A"),
            Task::B => write!(f, "B"),
            Task::C => write!(f, "C"),
        }
    }
}

impl std::str::FromStr for Task {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Task::A),
            "B" | "b" => Ok(Task::B),
            "C" | "c" => Ok(Task::C),
            other => Err(Error::InvalidInput(format!("unknown task {other:?}"))),
        }
    }
}

/// Offensive or not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LabelA {
    #[serde(rename = "NOT")]
    Not,
    #[serde(rename = "OFF")]
    Off,
}

/// Targeted insult or untargeted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LabelB {
    #[serde(rename = "TIN")]
    Tin,
    #[serde(rename = "UNT")]
    Unt,
}

/// Target of a targeted insult.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LabelC {
    #[serde(rename = "GRP")]
    Grp,
    #[serde(rename = "IND")]
    Ind,
    #[serde(rename = "OTH")]
    Oth,
}

impl LabelA {
    pub fn as_str(self) -> &'static str {
        match self {
            LabelA::Not => "NOT",
            LabelA::Off => "OFF",
        }
    }
}

impl LabelB {
    pub fn as_str(self) -> &'static str {
        match self {
            LabelB::Tin => "TIN",
            LabelB::Unt => "UNT",
        }
    }
}

impl LabelC {
    pub fn as_str(self) -> &'static str {
        match self {
            LabelC::Grp => "GRP",
            LabelC::Ind => "IND",
            LabelC::Oth => "OTH",
        }
    }
}

/// One labeled instance. `label_b` implies `label_a == OFF`, and `label_c`
/// implies `label_b == TIN`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tweet {
    pub id: String,
    pub text: String,
    pub label_a: Option<LabelA>,
    pub label_b: Option<LabelB>,
    pub label_c: Option<LabelC>,
}

impl Tweet {
    /// Check hierarchy and non-empty-text rules.
    pub fn validate(&self) -> Result<()> {
        if self.text.trim().is_empty() {
            return Err(Error::Validation(format!(
                "tweet {} has empty text",
                self.id
            )));
        }
        if self.label_b.is_some() && self.label_a != Some(LabelA::Off) {
            return Err(Error::Validation(format!(
                "tweet {}: subtask_b label without subtask_a = OFF",
                self.id
            )));
        }
        if self.label_c.is_some() && self.label_b != Some(LabelB::Tin) {
            return Err(Error::Validation(format!(
                "tweet {}: subtask_c label without subtask_b = TIN",
                self.id
            )));
        }
        Ok(())
    }

    /// The label string this tweet carries for `task`, if any.
    pub fn label_for(&self, task: Task) -> Option<&'static str> {
        match task {
            Task::A => self.label_a.map(LabelA::as_str),
            Task::B => self.label_b.map(LabelB::as_str),
            Task::C => self.label_c.map(LabelC::as_str),
        }
    }
}

/// An ordered, validated collection of tweets for one task.
///
/// Immutable after construction; every tweet is guaranteed to carry the label
/// the task needs, ids are unique, and hierarchy rules hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledCorpus {
    task: Task,
    tweets: Vec<Tweet>,
}

impl LabeledCorpus {
    pub fn new(task: Task, tweets: Vec<Tweet>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(tweets.len());
        for tweet in &tweets {
            tweet.validate()?;
            if tweet.label_for(task).is_none() {
                return Err(Error::Validation(format!(
                    "tweet {} lacks the task-{task} label",
                    tweet.id
                )));
            }
            if !seen.insert(tweet.id.as_str()) {
                return Err(Error::Validation(format!("duplicate tweet id {}", tweet.id)));
            }
        }
        Ok(LabeledCorpus { task, tweets })
    }

    pub fn task(&self) -> Task {
        self.task
    }

    pub fn label_set(&self) -> &'static [&'static str] {
        self.task.label_set()
    }

    pub fn tweets(&self) -> &[Tweet] {
        &self.tweets
    }

    pub fn len(&self) -> usize {
        self.tweets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tweets.is_empty()
    }

    /// Label string of each tweet for this corpus's task, in order.
    pub fn labels(&self) -> Vec<&'static str> {
        self.tweets
            .iter()
            .map(|t| t.label_for(self.task).expect("validated at construction"))
            .collect()
    }

    pub fn texts(&self) -> impl Iterator<Item = &str> {
        self.tweets.iter().map(|t| t.text.as_str())
    }
}

/// Per-label counts and fractions of a corpus.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistributionReport {
    pub counts: BTreeMap<String, usize>,
    pub fractions: BTreeMap<String, f64>,
    pub total: usize,
}

/// Exact label counts and fractions. Errors on an empty corpus.
pub fn class_distribution(corpus: &LabeledCorpus) -> Result<DistributionReport> {
    if corpus.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for label in corpus.label_set() {
        counts.insert((*label).to_string(), 0);
    }
    for label in corpus.labels() {
        *counts.get_mut(label).expect("label in task set") += 1;
    }
    let total = corpus.len();
    let fractions = counts
        .iter()
        .map(|(l, &c)| (l.clone(), c as f64 / total as f64))
        .collect();
    Ok(DistributionReport {
        counts,
        fractions,
        total,
    })
}

fn parse_label_a(path: &Path, line: usize, field: &str) -> Result<Option<LabelA>> {
    match field {
        "NULL" => Ok(None),
        "NOT" => Ok(Some(LabelA::Not)),
        "OFF" => Ok(Some(LabelA::Off)),
        other => Err(Error::parse(
            path,
            line,
            format!("invalid subtask_a label {other:?}"),
        )),
    }
}

fn parse_label_b(path: &Path, line: usize, field: &str) -> Result<Option<LabelB>> {
    match field {
        "NULL" => Ok(None),
        "TIN" => Ok(Some(LabelB::Tin)),
        "UNT" => Ok(Some(LabelB::Unt)),
        other => Err(Error::parse(
            path,
            line,
            format!("invalid subtask_b label {other:?}"),
        )),
    }
}

fn parse_label_c(path: &Path, line: usize, field: &str) -> Result<Option<LabelC>> {
    match field {
        "NULL" => Ok(None),
        "IND" => Ok(Some(LabelC::Ind)),
        "GRP" => Ok(Some(LabelC::Grp)),
        "OTH" => Ok(Some(LabelC::Oth)),
        other => Err(Error::parse(
            path,
            line,
            format!("invalid subtask_c label {other:?}"),
        )),
    }
}

/// Load the hierarchical training file: one header row, then
/// `id<TAB>tweet<TAB>subtask_a<TAB>subtask_b<TAB>subtask_c` with literal
/// `NULL` for absent labels. Returns a task-A corpus.
pub fn load_olid_train(path: impl AsRef<Path>) -> Result<LabeledCorpus> {
    let path = path.as_ref();
    let raw = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut tweets = Vec::new();
    for (idx, line) in raw.lines().enumerate() {
        let line_no = idx + 1;
        if idx == 0 {
            let cols = line.split('\t').count();
            if cols != 5 {
                return Err(Error::parse(
                    path,
                    line_no,
                    format!("expected 5 tab-separated header columns, found {cols}"),
                ));
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 5 {
            return Err(Error::parse(
                path,
                line_no,
                format!("expected 5 columns, found {}", fields.len()),
            ));
        }
        let tweet = Tweet {
            id: fields[0].to_string(),
            text: fields[1].to_string(),
            label_a: parse_label_a(path, line_no, fields[2])?,
            label_b: parse_label_b(path, line_no, fields[3])?,
            label_c: parse_label_c(path, line_no, fields[4])?,
        };
        tweets.push(tweet);
    }
    LabeledCorpus::new(Task::A, tweets)
}

/// Write a corpus back to the five-column tab-separated format (header
/// included). Inverse of [`load_olid_train`] for task-A corpora.
pub fn save_olid_tsv(corpus: &LabeledCorpus, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let mut out = String::from("id\ttweet\tsubtask_a\tsubtask_b\tsubtask_c\n");
    for t in corpus.tweets() {
        let a = t.label_a.map_or("NULL", LabelA::as_str);
        let b = t.label_b.map_or("NULL", LabelB::as_str);
        let c = t.label_c.map_or("NULL", LabelC::as_str);
        out.push_str(&format!("{}\t{}\t{a}\t{b}\t{c}\n", t.id, t.text));
    }
    let mut file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    file.write_all(out.as_bytes()).map_err(|e| Error::io(path, e))?;
    Ok(())
}

/// Read a test-tweet file (`id<TAB>tweet`, one header row) and a gold-label
/// file (`id,label` CSV, no header), join on id, and return a corpus for
/// `task`. Labels implied by the hierarchy are filled in: a task-B corpus
/// gets `label_a = OFF`, a task-C corpus additionally `label_b = TIN`.
pub fn load_olid_test(
    tweets_path: impl AsRef<Path>,
    labels_path: impl AsRef<Path>,
    task: Task,
) -> Result<LabeledCorpus> {
    let tweets_path = tweets_path.as_ref();
    let labels_path = labels_path.as_ref();

    let raw = fs::read_to_string(tweets_path).map_err(|e| Error::io(tweets_path, e))?;
    let mut texts: Vec<(String, String)> = Vec::new();
    for (idx, line) in raw.lines().enumerate() {
        let line_no = idx + 1;
        if idx == 0 {
            continue; // header
        }
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 2 {
            return Err(Error::parse(
                tweets_path,
                line_no,
                format!("expected 2 columns, found {}", fields.len()),
            ));
        }
        texts.push((fields[0].to_string(), fields[1].to_string()));
    }

    let raw = fs::read_to_string(labels_path).map_err(|e| Error::io(labels_path, e))?;
    let mut gold: HashMap<String, String> = HashMap::new();
    for (idx, line) in raw.lines().enumerate() {
        if line.is_empty() {
            continue;
        }
        let (id, label) = line.split_once(',').ok_or_else(|| {
            Error::parse(labels_path, idx + 1, "expected `id,label`".to_string())
        })?;
        gold.insert(id.trim().to_string(), label.trim().to_string());
    }

    let tweet_ids: HashSet<&str> = texts.iter().map(|(id, _)| id.as_str()).collect();
    let missing_from_labels: Vec<&str> = texts
        .iter()
        .map(|(id, _)| id.as_str())
        .filter(|id| !gold.contains_key(*id))
        .collect();
    let missing_from_tweets: Vec<&str> = gold
        .keys()
        .map(String::as_str)
        .filter(|id| !tweet_ids.contains(*id))
        .collect();
    if !missing_from_labels.is_empty() || !missing_from_tweets.is_empty() {
        let mut sample: Vec<String> = missing_from_labels
            .iter()
            .chain(missing_from_tweets.iter())
            .take(5)
            .map(|s| (*s).to_string())
            .collect();
        sample.sort();
        return Err(Error::Join {
            missing_from_labels: missing_from_labels.len(),
            missing_from_tweets: missing_from_tweets.len(),
            sample,
        });
    }

    let mut tweets = Vec::with_capacity(texts.len());
    for (id, text) in texts {
        let label = &gold[&id];
        let mut tweet = Tweet {
            id,
            text,
            label_a: None,
            label_b: None,
            label_c: None,
        };
        match task {
            Task::A => {
                tweet.label_a = parse_label_a(labels_path, 0, label)?;
                if tweet.label_a.is_none() {
                    return Err(Error::Validation(format!(
                        "gold label NULL for tweet {}",
                        tweet.id
                    )));
                }
            }
            Task::B => {
                tweet.label_a = Some(LabelA::Off);
                tweet.label_b = parse_label_b(labels_path, 0, label)?;
            }
            Task::C => {
                tweet.label_a = Some(LabelA::Off);
                tweet.label_b = Some(LabelB::Tin);
                tweet.label_c = parse_label_c(labels_path, 0, label)?;
            }
        }
        tweets.push(tweet);
    }
    LabeledCorpus::new(task, tweets)
}

/// Load the hate-speech CSV (`id,text,HS,...`). `HS = 1` maps to OFF and
/// `HS = 0` to NOT; any other columns are ignored.
pub fn load_hateval(path: impl AsRef<Path>) -> Result<LabeledCorpus> {
    let path = path.as_ref();
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(false)
        .from_path(path)
        .map_err(|e| match e.kind() {
            csv::ErrorKind::Io(_) => {
                Error::io(path, std::io::Error::new(std::io::ErrorKind::Other, e))
            }
            _ => Error::parse(path, 0, e.to_string()),
        })?;

    let headers = reader
        .headers()
        .map_err(|e| Error::parse(path, 1, e.to_string()))?
        .clone();
    let col = |name: &str| -> Result<usize> {
        headers
            .iter()
            .position(|h| h.eq_ignore_ascii_case(name))
            .ok_or_else(|| Error::parse(path, 1, format!("missing column {name:?}")))
    };
    let id_col = col("id")?;
    let text_col = col("text")?;
    let hs_col = col("HS")?;

    let mut tweets = Vec::new();
    for (idx, record) in reader.records().enumerate() {
        let line_no = idx + 2;
        let record = record.map_err(|e| Error::parse(path, line_no, e.to_string()))?;
        let hs = record.get(hs_col).unwrap_or("").trim();
        let label_a = match hs {
            "0" => LabelA::Not,
            "1" => LabelA::Off,
            other => {
                return Err(Error::parse(
                    path,
                    line_no,
                    format!("HS flag must be 0 or 1, found {other:?}"),
                ))
            }
        };
        tweets.push(Tweet {
            id: record.get(id_col).unwrap_or("").to_string(),
            text: record.get(text_col).unwrap_or("").to_string(),
            label_a: Some(label_a),
            label_b: None,
            label_c: None,
        });
    }
    LabeledCorpus::new(Task::A, tweets)
}

/// Filter a task-A corpus down to task B (offensive tweets re-keyed on the
/// target label) or task C (targeted insults re-keyed on the target type).
pub fn derive_subtask(corpus: &LabeledCorpus, target: Task) -> Result<LabeledCorpus> {
    if corpus.task() != Task::A && !(corpus.task() == Task::B && target == Task::C) {
        return Err(Error::TaskMismatch {
            expected: "A".to_string(),
            found: corpus.task().to_string(),
        });
    }
    let tweets: Vec<Tweet> = match target {
        Task::A => corpus.tweets().to_vec(),
        Task::B => corpus
            .tweets()
            .iter()
            .filter(|t| t.label_a == Some(LabelA::Off) && t.label_b.is_some())
            .cloned()
            .collect(),
        Task::C => corpus
            .tweets()
            .iter()
            .filter(|t| t.label_b == Some(LabelB::Tin) && t.label_c.is_some())
            .cloned()
            .collect(),
    };
    // An empty result is valid: construct directly, invariants still checked.
    LabeledCorpus::new(target, tweets)
}

/// Concatenate two same-task corpora, `a` first, no deduplication. Ids from
/// `b` that collide with `a` are prefixed with `b.` until unique.
pub fn merge(a: &LabeledCorpus, b: &LabeledCorpus) -> Result<LabeledCorpus> {
    if a.task() != b.task() {
        return Err(Error::TaskMismatch {
            expected: a.task().to_string(),
            found: b.task().to_string(),
        });
    }
    let mut ids: HashSet<String> = a.tweets().iter().map(|t| t.id.clone()).collect();
    let mut tweets = a.tweets().to_vec();
    for tweet in b.tweets() {
        let mut t = tweet.clone();
        while ids.contains(&t.id) {
            t.id = format!("b.{}", t.id);
        }
        ids.insert(t.id.clone());
        tweets.push(t);
    }
    LabeledCorpus::new(a.task(), tweets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write as _;

    fn write_temp(content: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    const HEADER: &str = "id\ttweet\tsubtask_a\tsubtask_b\tsubtask_c\n";

    #[test]
    fn load_train_two_row_fixture() {
        let f = write_temp(&format!(
            "{HEADER}1\thi there\tNOT\tNULL\tNULL\n2\tyou idiot\tOFF\tTIN\tIND\n"
        ));
        let corpus = load_olid_train(f.path()).unwrap();
        assert_eq!(corpus.len(), 2);
        assert_eq!(corpus.task(), Task::A);
        let second = &corpus.tweets()[1];
        assert_eq!(second.label_a, Some(LabelA::Off));
        assert_eq!(second.label_b, Some(LabelB::Tin));
        assert_eq!(second.label_c, Some(LabelC::Ind));
    }

    #[test]
    fn load_train_rejects_hierarchy_violation() {
        let f = write_temp(&format!("{HEADER}3\tx\tNOT\tTIN\tNULL\n"));
        let err = load_olid_train(f.path()).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains('3'), "error should name the id: {msg}");
    }

    #[test]
    fn load_train_rejects_wrong_column_count() {
        let f = write_temp(&format!("{HEADER}1\thello\tNOT\tNULL\n"));
        match load_olid_train(f.path()).unwrap_err() {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn load_train_rejects_duplicate_ids() {
        let f = write_temp(&format!(
            "{HEADER}1\thello\tNOT\tNULL\tNULL\n1\tagain\tOFF\tUNT\tNULL\n"
        ));
        assert!(matches!(
            load_olid_train(f.path()),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn load_train_accepts_crlf() {
        let f = write_temp("id\ttweet\ta\tb\tc\r\n1\thello world\tNOT\tNULL\tNULL\r\n");
        let corpus = load_olid_train(f.path()).unwrap();
        assert_eq!(corpus.len(), 1);
        assert_eq!(corpus.tweets()[0].text, "hello world");
    }

    #[test]
    fn hateval_maps_binary_flag() {
        let f = write_temp("id,text,HS,TR,AG\n10,some text,1,0,0\n11,\"fine, thanks\",0,0,0\n");
        let corpus = load_hateval(f.path()).unwrap();
        assert_eq!(corpus.len(), 2);
        assert_eq!(corpus.tweets()[0].label_a, Some(LabelA::Off));
        assert_eq!(corpus.tweets()[1].label_a, Some(LabelA::Not));
        assert_eq!(corpus.tweets()[1].text, "fine, thanks");
    }

    #[test]
    fn hateval_rejects_bad_flag() {
        let f = write_temp("id,text,HS,TR,AG\n10,some text,2,0,0\n");
        assert!(matches!(load_hateval(f.path()), Err(Error::Parse { .. })));
    }

    #[test]
    fn test_set_joins_on_id() {
        let tweets = write_temp("id\ttweet\n100\tgood morning\n101\tyou fool\n");
        let labels = write_temp("100,NOT\n101,OFF\n");
        let corpus = load_olid_test(tweets.path(), labels.path(), Task::A).unwrap();
        assert_eq!(corpus.len(), 2);
        assert_eq!(corpus.labels(), vec!["NOT", "OFF"]);
    }

    #[test]
    fn test_set_reports_missing_ids() {
        let tweets = write_temp("id\ttweet\n100\tgood morning\n");
        let labels = write_temp("100,NOT\n999,OFF\n");
        match load_olid_test(tweets.path(), labels.path(), Task::A).unwrap_err() {
            Error::Join {
                missing_from_tweets,
                sample,
                ..
            } => {
                assert_eq!(missing_from_tweets, 1);
                assert!(sample.contains(&"999".to_string()));
            }
            other => panic!("expected join error, got {other:?}"),
        }
    }

    #[test]
    fn test_set_fills_implied_labels() {
        let tweets = write_temp("id\ttweet\n7\tall of them\n");
        let labels = write_temp("7,GRP\n");
        let corpus = load_olid_test(tweets.path(), labels.path(), Task::C).unwrap();
        let t = &corpus.tweets()[0];
        assert_eq!(t.label_a, Some(LabelA::Off));
        assert_eq!(t.label_b, Some(LabelB::Tin));
        assert_eq!(t.label_c, Some(LabelC::Grp));
    }

    fn small_train() -> LabeledCorpus {
        let rows = "\
1\ta normal tweet\tNOT\tNULL\tNULL
2\tyou idiot\tOFF\tTIN\tIND
3\tall of you suck\tOFF\tTIN\tGRP
4\tugh whatever\tOFF\tUNT\tNULL
5\tnice weather\tNOT\tNULL\tNULL
";
        let f = write_temp(&format!("{HEADER}{rows}"));
        load_olid_train(f.path()).unwrap()
    }

    #[test]
    fn derive_filters_and_rekeys() {
        let a = small_train();
        let b = derive_subtask(&a, Task::B).unwrap();
        assert_eq!(b.task(), Task::B);
        assert_eq!(b.len(), 3);
        assert_eq!(b.labels(), vec!["TIN", "TIN", "UNT"]);

        let c = derive_subtask(&a, Task::C).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.labels(), vec!["IND", "GRP"]);
    }

    #[test]
    fn derive_count_matches_distribution() {
        let a = small_train();
        let b = derive_subtask(&a, Task::B).unwrap();
        let dist = class_distribution(&a).unwrap();
        assert_eq!(b.len(), dist.counts["OFF"]);
    }

    #[test]
    fn derive_on_all_not_corpus_is_empty() {
        let f = write_temp(&format!("{HEADER}1\thello\tNOT\tNULL\tNULL\n"));
        let a = load_olid_train(f.path()).unwrap();
        let b = derive_subtask(&a, Task::B).unwrap();
        assert!(b.is_empty());
    }

    #[test]
    fn merge_concatenates_in_order() {
        let a = small_train();
        let empty = LabeledCorpus::new(Task::A, vec![]).unwrap();
        let merged = merge(&a, &empty).unwrap();
        assert_eq!(merged, a);

        let merged = merge(&a, &a).unwrap();
        assert_eq!(merged.len(), 2 * a.len());
        // collided ids got prefixed
        assert_eq!(merged.tweets()[a.len()].id, "b.1");
    }

    #[test]
    fn merge_rejects_task_mismatch() {
        let a = small_train();
        let b = derive_subtask(&a, Task::B).unwrap();
        assert!(matches!(merge(&a, &b), Err(Error::TaskMismatch { .. })));
    }

    #[test]
    fn distribution_counts_and_fractions() {
        let a = small_train();
        let dist = class_distribution(&a).unwrap();
        assert_eq!(dist.counts["NOT"], 2);
        assert_eq!(dist.counts["OFF"], 3);
        assert_eq!(dist.total, 5);
        assert!((dist.fractions["OFF"] - 0.6).abs() < 1e-12);
        let sum: f64 = dist.fractions.values().sum();
        assert!((sum - 1.0).abs() < 1e-9);
    }

    #[test]
    fn distribution_of_empty_corpus_errors() {
        let empty = LabeledCorpus::new(Task::A, vec![]).unwrap();
        assert!(matches!(class_distribution(&empty), Err(Error::EmptyCorpus)));
    }

    #[test]
    fn single_tweet_fraction_is_one() {
        let f = write_temp(&format!("{HEADER}9\tonly tweet\tOFF\tNULL\tNULL\n"));
        let a = load_olid_train(f.path()).unwrap();
        let dist = class_distribution(&a).unwrap();
        assert_eq!(dist.fractions["OFF"], 1.0);
    }

    #[test]
    fn tsv_round_trip() {
        let a = small_train();
        let out = tempfile::NamedTempFile::new().unwrap();
        save_olid_tsv(&a, out.path()).unwrap();
        let reloaded = load_olid_train(out.path()).unwrap();
        assert_eq!(reloaded, a);
    }
}
