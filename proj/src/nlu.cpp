#include "taco/nlu.hpp"

#include <algorithm>
#include <sstream>

#include "taco/corpus.hpp"
#include "taco/rng.hpp"
#include "taco/text.hpp"

namespace taco::nlu {

namespace {

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

Phase phase_from_name(const std::string& s) {
  if (s == "TaskSearch") return Phase::TaskSearch;
  if (s == "TaskPreparation") return Phase::TaskPreparation;
  if (s == "TaskExecution") return Phase::TaskExecution;
  if (s == "Halt") return Phase::Halt;
  throw ParseError("unknown phase '" + s + "' in ASR rule table");
}

bool regex_hit(const std::string& pattern, const std::string& text) {
  return std::regex_search(text, std::regex(pattern));
}

}  // namespace

// ---------------------------------------------------------------------------
// ASR

std::vector<AsrRule> parse_asr_rules(std::string_view csv) {
  std::vector<AsrRule> rules;
  std::istringstream in{std::string(csv)};
  std::string line;
  bool header = true;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::collapse_whitespace(line).empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      if (text::starts_with_icase(line, "wrong,")) continue;
    }
    std::vector<std::string> cols;
    std::stringstream ls(line);
    std::string col;
    while (std::getline(ls, col, ',')) cols.push_back(col);
    if (cols.size() != 3) throw ParseError("ASR rules line " + std::to_string(line_no) + ": expected 3 columns");
    AsrRule r;
    r.wrong = text::normalize_utterance(cols[0]);
    r.right = text::normalize_utterance(cols[1]);
    std::stringstream ps(cols[2]);
    std::string p;
    while (std::getline(ps, p, '|')) {
      auto name = text::collapse_whitespace(p);
      if (!name.empty()) r.applicable_phases.insert(phase_from_name(name));
    }
    if (r.wrong.empty() || r.right.empty() || r.wrong == r.right || r.applicable_phases.empty())
      throw ValidationError("ASR rules line " + std::to_string(line_no) + ": invalid rule");
    rules.push_back(std::move(r));
  }
  return rules;
}

std::vector<AsrRule> load_asr_rules(const std::filesystem::path& path) {
  return parse_asr_rules(read_file(path));
}

std::string correct_asr(std::string_view utterance, Phase phase, const std::vector<AsrRule>& rules) {
  auto words = split_words(text::normalize_utterance(utterance));
  for (const auto& rule : rules) {
    if (!rule.applicable_phases.count(phase)) continue;
    auto from = split_words(rule.wrong);
    auto to = split_words(rule.right);
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < words.size()) {
      if (i + from.size() <= words.size() &&
          std::equal(from.begin(), from.end(), words.begin() + static_cast<std::ptrdiff_t>(i))) {
        out.insert(out.end(), to.begin(), to.end());
        i += from.size();
      } else {
        out.push_back(words[i++]);
      }
    }
    words = std::move(out);
  }
  return text::join(words, " ");
}

std::vector<std::string> lint_asr_rules(const std::vector<AsrRule>& rules) {
  std::vector<std::string> problems;
  for (const auto& a : rules) {
    auto out = split_words(a.right);
    for (const auto& b : rules) {
      bool shared = std::any_of(a.applicable_phases.begin(), a.applicable_phases.end(),
                                [&](Phase p) { return b.applicable_phases.count(p) > 0; });
      if (!shared) continue;
      if (text::find_phrase(out, split_words(b.wrong)) != text::npos)
        problems.push_back("output '" + a.right + "' re-triggers rule '" + b.wrong + "'");
    }
  }
  return problems;
}

// ---------------------------------------------------------------------------
// Parsers

std::optional<int> parse_number(std::string_view word) {
  static const std::map<std::string, int, std::less<>> kWords = {
      {"one", 1},      {"two", 2},        {"three", 3},     {"four", 4},      {"five", 5},
      {"six", 6},      {"seven", 7},      {"eight", 8},     {"nine", 9},      {"ten", 10},
      {"eleven", 11},  {"twelve", 12},    {"thirteen", 13}, {"fourteen", 14}, {"fifteen", 15},
      {"sixteen", 16}, {"seventeen", 17}, {"eighteen", 18}, {"nineteen", 19}, {"twenty", 20},
      {"first", 1},    {"second", 2},     {"third", 3},     {"fourth", 4},    {"fifth", 5},
      {"sixth", 6},    {"seventh", 7},    {"eighth", 8},    {"ninth", 9},     {"tenth", 10},
      {"1st", 1},      {"2nd", 2},        {"3rd", 3},       {"4th", 4},       {"5th", 5},
      {"thirty", 30},  {"forty", 40},     {"forty-five", 45}, {"sixty", 60},  {"ninety", 90}};
  if (auto it = kWords.find(word); it != kWords.end()) return it->second;
  if (!word.empty() && word.size() <= 4 &&
      std::all_of(word.begin(), word.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return std::stoi(std::string(word));
  return std::nullopt;
}

namespace {

constexpr const char* kNum =
    "(\\d+|one|two|three|four|five|six|seven|eight|nine|ten|eleven|twelve|thirteen|fourteen|"
    "fifteen|sixteen|seventeen|eighteen|nineteen|twenty)";

std::string num_re(const std::string& before, const std::string& after = "") {
  return before + kNum + after;
}

}  // namespace

NavCommand parse_navigation(std::string_view utterance) {
  const std::string u = text::normalize_utterance(utterance);
  std::smatch m;

  static const std::regex kGoto(num_re("\\b(?:go|jump|skip|move|take me|bring me|back)?\\s*(?:back )?to step ", "\\b"));
  static const std::regex kBareStep(num_re("^(?:(?:start|begin|read|show me|what's|what is) )?(?:the )?step (?:number )?", "$"));
  if (std::regex_search(u, m, kGoto) || std::regex_search(u, m, kBareStep))
    return {NavKind::GoToStep, *parse_number(m[1].str())};

  static const std::regex kFwdN(num_re("\\b(?:skip|go forward|forward|ahead|next|move ahead|jump ahead|skip ahead)(?: by)? ", " steps?\\b"));
  if (std::regex_search(u, m, kFwdN)) return {NavKind::Forward, *parse_number(m[1].str())};

  static const std::regex kBackN(num_re("\\b(?:go back|back|backward|backwards|rewind|go backward|go backwards)(?: by)? ", " steps?\\b"));
  if (std::regex_search(u, m, kBackN)) return {NavKind::Backward, *parse_number(m[1].str())};

  static const std::regex kBackN2(num_re("\\b", " steps? back\\b"));
  if (std::regex_search(u, m, kBackN2)) return {NavKind::Backward, *parse_number(m[1].str())};

  static const std::regex kMore(
      "\\b(?:more|other|different|another|next|new) (?:options?|choices?|results?|recipes?|tasks?|ones?|projects?|page)\\b|"
      "\\bshow (?:me )?(?:some )?more\\b|\\bsee more\\b|\\bsomething else\\b|^more$|\\bmore choice\\b");
  if (std::regex_search(u, kMore)) return {NavKind::MoreChoice, 0};

  static const std::regex kLess(
      "\\b(?:previous|earlier|prior|last|first) (?:options?|choices?|results?|page|ones?|recipes?|tasks?)\\b|"
      "\\bless (?:options?|choices?)\\b|^less$|\\bless choice\\b|\\bgo back to the (?:previous |earlier |first )?(?:options?|results?|list)\\b");
  if (std::regex_search(u, kLess)) return {NavKind::LessChoice, 0};

  static const std::regex kFwd(
      "\\b(?:next|continue|go on|move on|keep going|go ahead with the next|proceed|go forward|forward|"
      "what's next|what is next|then what|skip|skip this|skip it|done with this step)\\b");
  if (std::regex_search(u, kFwd)) return {NavKind::Forward, 1};

  static const std::regex kBack(
      "\\b(?:go back|previous|back up|backwards?|last step|step back|go backward|rewind|before that)\\b|^back$");
  if (std::regex_search(u, kBack)) return {NavKind::Backward, 1};

  throw UnparseableNavigation();
}

std::optional<int> parse_choice(std::string_view utterance) {
  const std::string u = text::normalize_utterance(utterance);
  static const std::regex kOrdinal(
      "^(?:(?:yes|yeah|ok|okay|sure|no|um|uh|hmm|let's|let's do|let's go with|let's try|let's make|"
      "i'll|i'll take|i'll go with|i'll have|i'll do|i want|i'd like|i will take|i choose|i pick|"
      "i'd like to do|i'd like to try|can i have|choose|pick|select|give me|start|do|show me),? )*"
      "(?:the )?(first|second|third|1st|2nd|3rd)(?: one| option| recipe| task| choice| result| project)?(?: please)?$");
  static const std::regex kNumbered("^(?:(?:i'll take|i choose|i pick|choose|pick|select|give me|let's do|let's go with) )?(?:option|number|choice|result) (one|two|three|1|2|3)(?: please)?$");
  std::smatch m;
  if (std::regex_search(u, m, kOrdinal) || std::regex_search(u, m, kNumbered))
    return parse_number(m[1].str());
  return std::nullopt;
}

std::optional<int> parse_duration_seconds(std::string_view utterance) {
  std::string u = text::normalize_utterance(utterance);
  static const std::regex kHalfHour("\\bhalf an hour\\b");
  int total = 0;
  bool any = false;
  if (std::regex_search(u, kHalfHour)) {
    total += 1800;
    any = true;
    u = std::regex_replace(u, kHalfHour, " ");
  }
  static const std::regex kAmount(
      "\\b(\\d+|an?|one|two|three|four|five|six|seven|eight|nine|ten|eleven|twelve|thirteen|fourteen|"
      "fifteen|sixteen|seventeen|eighteen|nineteen|twenty|thirty|forty|forty-five|sixty|ninety)"
      "( and a half)? (hours?|hrs?|minutes?|mins?|seconds?|secs?)( and a half)?\\b");
  for (auto it = std::sregex_iterator(u.begin(), u.end(), kAmount); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    std::string amount = m[1].str();
    double n = (amount == "a" || amount == "an") ? 1.0 : static_cast<double>(parse_number(amount).value_or(0));
    if (m[2].matched || m[4].matched) n += 0.5;
    std::string unit = m[3].str();
    int scale = unit[0] == 'h' ? 3600 : (unit[0] == 'm' ? 60 : 1);
    total += static_cast<int>(n * scale);
    any = true;
  }
  if (!any || total <= 0) return std::nullopt;
  return total;
}

std::optional<std::string> parse_list_item(std::string_view utterance) {
  const std::string u = text::normalize_utterance(utterance);
  static const std::regex kItem(
      "\\b(?:add|put|include|remove|delete|take|drop|erase)(?: some| the| a| an)? (.+?)"
      "(?: off| out)?(?: to| on| onto| from| off of| in)(?: my| the)? (?:shopping |grocery |to-?do )?list\\b");
  static const std::regex kItem2("\\b(?:add|put|include|remove|delete|drop|erase)(?: some| the| a| an)? (.+)$");
  std::smatch m;
  if (std::regex_search(u, m, kItem) || std::regex_search(u, m, kItem2)) {
    auto item = text::collapse_whitespace(m[1].str());
    static const std::regex kTrail("(?: please| to (?:my|the) (?:shopping |grocery )?list| off| out)$");
    item = std::regex_replace(item, kTrail, "");
    if (!item.empty() && item != "it" && item != "that") return item;
  }
  return std::nullopt;
}

bool is_recommendation_request(std::string_view utterance) {
  static const std::regex kRec(
      "\\b(?:favou?rites?|recommend|recommendations?|suggest|suggestions?|surprise me|"
      "what should i (?:make|do|cook|try)|any ideas)\\b");
  return std::regex_search(text::normalize_utterance(utterance), kRec);
}

// ---------------------------------------------------------------------------
// Intent labels

const std::vector<std::string>& coarse_labels() {
  static const std::vector<std::string> kLabels = {
      "affirm", "negate", "task_request", "navigation", "detail_request", "task_complete",
      "stop",   "repeat", "help",         "question",   "list",           "timer"};
  return kLabels;
}

std::string coarse_name(const IntentLabel& l) {
  switch (l.kind()) {
    case IntentKind::Affirm: return "affirm";
    case IntentKind::Negate: return "negate";
    case IntentKind::Neutral: return "";
    default: return to_string(l.type());
  }
}

std::set<std::string> coarse_set(const IntentSet& s) {
  std::set<std::string> out;
  for (const auto& l : s.labels) {
    auto n = coarse_name(l);
    if (!n.empty()) out.insert(n);
  }
  return out;
}

const std::vector<PatternRule>& default_pattern_rules() {
  static const std::vector<PatternRule> kRules = {
      {"^(?:alexa )?(?:stop|quit|exit|goodbye|good bye|bye|bye bye|shut up|turn off|i'm done talking|"
       "end (?:the )?(?:conversation|session|chat)|stop (?:the )?(?:conversation|session|chat))"
       "(?: please| now| alexa)?$",
       IntentLabel(IntentKind::Stop)},
      {"\\b(?:repeat(?: that| it| the (?:last )?step| please| yourself)?|say (?:that|it) again|come again|"
       "what did you (?:just )?say|pardon(?: me)?|one more time)\\b",
       IntentLabel(IntentKind::Repeat)},
      {"^(?:alexa )?(?:help|help me|i need help|what can i (?:say|do)|what can you do|how does this work|"
       "what are my options|i'm (?:lost|confused))(?: please)?$",
       IntentLabel(IntentKind::Help)},
      {"^(?:cancel|cancel that|cancel it|never ?mind|forget it|forget about it)$", IntentLabel(IntentKind::Negate)},
      {"\\b(?:i'm (?:all )?(?:done|finished)(?: with (?:the |this |my )?(?:task|recipe|project|it))?$|"
       "i (?:am|have) (?:all )?(?:done|finished)|all done|i finished|i completed|"
       "(?:done|finished) with (?:the |this |my )?(?:task|recipe|project)|"
       "(?:task|recipe|project) (?:is )?(?:complete|completed|done|finished))",
       IntentLabel(IntentKind::TaskComplete)},
      {"\\b(?:more details?|tell me more|more info(?:rmation)?|explain(?: that| this| it| more)?|elaborate|"
       "give me (?:the )?details|(?:the|any|more) details|details please|what do you mean|in more detail|"
       "go into detail)\\b",
       IntentLabel(IntentKind::DetailRequest)},
      {"\\b(?:next|previous|go back|go forward|skip|move on|continue|keep going|what's next|"
       "step (?:\\d+|one|two|three|four|five|six|seven|eight|nine|ten|eleven|twelve)|"
       "(?:more|other|different|another) (?:options?|choices?|results?|recipes?|tasks?)|show (?:me )?more|"
       "(?:previous|earlier) (?:options?|results?|page))\\b|^(?:go )?back$|^(?:more|less)$",
       IntentLabel::navigation({NavKind::Forward, 1})},
      {"^(?:yes|yeah|yep|yup|yea|sure|ok|okay|alright|all right|sounds good|sounds great|let's do it|"
       "let's go|let's start|let's begin|let's get started|start|begin|ready|i'm ready|go ahead|correct|"
       "absolutely|of course|definitely|perfect|great|that one)\\b",
       IntentLabel(IntentKind::Affirm)},
      {"^(?:no|nope|nah|not really|no thanks|no thank you|i don't think so|not that one|neither|"
       "none of (?:those|these|them))\\b",
       IntentLabel(IntentKind::Negate)},
      {"\\btimers?\\b", IntentLabel(IntentKind::TimerSet)},
      {"^(?:please )?(?:can you |could you )?(?:time|count down)\\b.*\\b(?:seconds?|minutes?|hours?)\\b",
       IntentLabel(IntentKind::TimerSet)},
      {"\\b(?:shopping list|grocery list|my list|the list|to-?do list)\\b", IntentLabel(IntentKind::ListAdd)},
      {"^(?:how (?:do|can|should) i|how to|(?:can|could) you (?:show|tell|teach) me how to|teach me how to|"
       "i (?:want|would like|'d like) to (?:know|learn) how to) "
       "(?!know\\b|tell\\b|check\\b|do (?:that|this|it)\\b|make sure\\b|use (?:it|this|that)\\b)\\w+",
       IntentLabel(IntentKind::TaskRequest)},
      {"\\b(?:favou?rites?|recommend|recommendations?|suggest|suggestions?|surprise me)\\b",
       IntentLabel(IntentKind::TaskRequest)},
  };
  return kRules;
}

namespace {

IntentKind refine_timer(const std::string& u) {
  if (regex_hit("\\b(?:pause|hold|freeze)\\b", u)) return IntentKind::TimerPause;
  if (regex_hit("\\b(?:resume|unpause|continue|restart)\\b", u)) return IntentKind::TimerResume;
  if (regex_hit("\\b(?:cancel|stop|delete|remove|turn off|clear|end|kill)\\b", u)) return IntentKind::TimerCancel;
  return IntentKind::TimerSet;
}

IntentKind refine_list(const std::string& u) {
  if (regex_hit("\\b(?:remove|delete|take (?:\\w+ )*(?:off|out)|drop|erase|cross off)\\b", u))
    return IntentKind::ListRemove;
  return IntentKind::ListAdd;
}

}  // namespace

IntentModel::IntentModel(std::vector<PatternRule> rules, NgramFeaturizer featurizer, LinearOvR linear)
    : rules_(std::move(rules)), featurizer_(std::move(featurizer)), linear_(std::move(linear)) {
  compile();
}

void IntentModel::compile() {
  compiled_.clear();
  compiled_.reserve(rules_.size());
  for (const auto& r : rules_) compiled_.emplace_back(r.pattern);
}

std::vector<IntentLabel> IntentModel::pattern_hits(const std::string& normalized) const {
  std::vector<IntentLabel> hits;
  for (std::size_t i = 0; i < rules_.size(); ++i)
    if (std::regex_search(normalized, compiled_[i])) hits.push_back(rules_[i].label);
  return hits;
}

Json IntentModel::to_json() const {
  Json rules = Json::array();
  for (const auto& r : rules_) rules.push_back({{"pattern", r.pattern}, {"label", r.label.to_string()}});
  return Json{{"version", kIntentModelVersion},
              {"pattern_rules", rules},
              {"featurizer", featurizer_.to_json()},
              {"linear", linear_.to_json()}};
}

IntentModel IntentModel::from_json(const Json& j) {
  if (j.value("version", 0) != kIntentModelVersion) throw ParseError("unsupported intent model version");
  std::vector<PatternRule> rules;
  for (const auto& r : j.at("pattern_rules"))
    rules.push_back({r.at("pattern").get<std::string>(), IntentLabel::parse(r.at("label").get<std::string>())});
  auto featurizer = NgramFeaturizer::from_json(j.at("featurizer"));
  auto linear = LinearOvR::from_json(j.at("linear"));
  if (linear.n_features() != featurizer.size()) throw ParseError("intent model: feature space mismatch");
  return IntentModel(std::move(rules), std::move(featurizer), std::move(linear));
}

std::string strip_disfluencies(std::string_view utterance) {
  static const std::set<std::string> kFillers = {"um", "umm", "uh", "uhh", "hmm", "hm", "er", "erm"};
  auto words = split_words(text::normalize_utterance(utterance));
  std::erase_if(words, [](const std::string& w) { return kFillers.count(w) > 0; });
  std::size_t begin = 0;
  while (begin < words.size()) {
    if (words[begin] == "well" || words[begin] == "so") {
      ++begin;
    } else if (words[begin] == "okay" && begin + 1 < words.size() && words[begin + 1] == "so") {
      begin += 2;
    } else {
      break;
    }
  }
  return text::join({words.begin() + static_cast<std::ptrdiff_t>(begin), words.end()}, " ");
}

std::vector<std::string> split_clauses(std::string_view utterance) {
  std::vector<std::string> out;
  std::string chunk;
  auto flush = [&] {
    std::vector<std::string> cur;
    for (auto& w : split_words(strip_disfluencies(chunk))) {
      if (w == "and") {
        if (!cur.empty()) out.push_back(text::join(cur, " "));
        cur.clear();
      } else {
        cur.push_back(std::move(w));
      }
    }
    if (!cur.empty()) out.push_back(text::join(cur, " "));
    chunk.clear();
  };
  for (char c : utterance) {
    if (c == ',' || c == '.' || c == ';' || c == '!' || c == '?')
      flush();
    else
      chunk.push_back(c);
  }
  flush();
  return out;
}

IntentSet recognize_intents(std::string_view utterance, const IntentModel& model) {
  IntentSet out;
  out.raw_utterance = std::string(utterance);
  const std::string u = strip_disfluencies(utterance);
  out.corrected_utterance = text::normalize_utterance(utterance);
  if (u.empty()) {
    out.labels = {IntentLabel(IntentKind::Ignore)};
    return out;
  }

  double affirm_score = 0.0;
  double negate_score = 0.0;
  auto add_coarse = [&](IntentKind kind) {
    switch (type_of(kind)) {
      case IntentType::Navigation:
        try {
          out.add(IntentLabel::navigation(parse_navigation(u)));
        } catch (const UnparseableNavigation&) {
        }
        break;
      case IntentType::Timer: out.add(IntentLabel(refine_timer(u))); break;
      case IntentType::List: out.add(IntentLabel(refine_list(u))); break;
      default: out.add(IntentLabel(kind)); break;
    }
  };

  auto hits = model.pattern_hits(u);
  if (auto clauses = split_clauses(utterance); clauses.size() > 1)
    for (const auto& c : clauses)
      for (const auto& h : model.pattern_hits(c)) hits.push_back(h);
  bool negate_pattern = false;
  for (const auto& hit : hits) {
    if (hit.kind() == IntentKind::Affirm) affirm_score = std::max(affirm_score, 1.0);
    if (hit.kind() == IntentKind::Negate) negate_score = std::max(negate_score, 1.0), negate_pattern = true;
    add_coarse(hit.kind());
  }

  static const std::map<std::string, IntentKind> kCoarseKind = {
      {"affirm", IntentKind::Affirm},        {"negate", IntentKind::Negate},
      {"task_request", IntentKind::TaskRequest}, {"navigation", IntentKind::Forward},
      {"detail_request", IntentKind::DetailRequest}, {"task_complete", IntentKind::TaskComplete},
      {"stop", IntentKind::Stop},            {"repeat", IntentKind::Repeat},
      {"help", IntentKind::Help},            {"question", IntentKind::Question},
      {"list", IntentKind::ListAdd},         {"timer", IntentKind::TimerSet}};
  const auto& linear = model.linear();
  auto run_linear = [&](const std::string& text) {
    auto x = model.featurizer().transform(text);
    for (std::size_t l = 0; l < linear.labels().size(); ++l) {
      double p = linear.probability(l, x);
      const auto& name = linear.labels()[l];
      if (name == "affirm") affirm_score = std::max(affirm_score, p);
      if (name == "negate") negate_score = std::max(negate_score, p);
      if (p >= linear.threshold(l)) {
        auto it = kCoarseKind.find(name);
        if (it != kCoarseKind.end()) add_coarse(it->second);
      }
    }
  };
  // A command that the whole utterance spells out is not second-guessed.
  const auto whole = model.pattern_hits(u);
  const bool exclusive = std::any_of(whole.begin(), whole.end(), [](const IntentLabel& l) {
    return l.kind() == IntentKind::Stop || l.kind() == IntentKind::Help;
  });
  if (!linear.labels().empty() && !exclusive) {
    run_linear(u);
    if (auto clauses = split_clauses(utterance); clauses.size() > 1)
      for (const auto& c : clauses) run_linear(c);
  }

  // "cancel the timer" is a timer command, not a rejection.
  if (out.has(IntentKind::TimerCancel) && !negate_pattern)
    std::erase_if(out.labels, [](const IntentLabel& l) { return l.kind() == IntentKind::Negate; });

  if (auto choice = parse_choice(u)) {
    out.choice = choice;
    out.remove_type(IntentType::Sentiment);
    out.remove_type(IntentType::Navigation);
    out.add(IntentLabel(IntentKind::Affirm));
  } else if (out.has(IntentKind::Affirm) && out.has(IntentKind::Negate)) {
    out.remove_type(IntentType::Sentiment);
    if (affirm_score > negate_score) out.add(IntentLabel(IntentKind::Affirm));
    if (negate_score > affirm_score) out.add(IntentLabel(IntentKind::Negate));
  }

  if (is_recommendation_request(u)) {
    out.wants_recommendation = true;
    out.add(IntentLabel(IntentKind::TaskRequest));
  }
  if (out.has(IntentType::Timer)) out.timer_seconds = parse_duration_seconds(u);
  if (out.has(IntentType::List)) out.list_item = parse_list_item(u);

  if (out.labels.empty()) out.labels = {IntentLabel(IntentKind::Ignore)};
  return out;
}

// ---------------------------------------------------------------------------
// State filtering

const std::set<IntentKind>& allowed_intents(const DialogueState& state) {
  using K = IntentKind;
  static const std::set<K> kUniversal = {K::Stop, K::Repeat, K::Help, K::Ignore};
  static const std::set<K> kUtility = {K::Question,  K::ListAdd,     K::ListRemove, K::TimerSet,
                                       K::TimerPause, K::TimerResume, K::TimerCancel};
  auto make = [&](std::initializer_list<K> extra, bool utility) {
    std::set<K> s = kUniversal;
    s.insert(extra);
    if (utility) s.insert(kUtility.begin(), kUtility.end());
    return s;
  };
  static const std::set<K> kWelcome = make({K::Affirm, K::Negate, K::TaskRequest}, true);
  static const std::set<K> kClarification = make({K::Affirm, K::Negate, K::TaskRequest}, false);
  static const std::set<K> kCatalog =
      make({K::Affirm, K::Negate, K::TaskRequest, K::MoreChoice, K::LessChoice, K::Backward, K::DetailRequest}, true);
  static const std::set<K> kComparison =
      make({K::Affirm, K::Negate, K::TaskRequest, K::MoreChoice, K::LessChoice, K::Backward}, true);
  static const std::set<K> kOverview =
      make({K::Affirm, K::Negate, K::TaskRequest, K::Forward, K::Backward, K::GoToStep, K::DetailRequest}, true);
  static const std::set<K> kStep = make(
      {K::Affirm, K::Negate, K::Forward, K::Backward, K::GoToStep, K::DetailRequest, K::TaskComplete}, true);
  static const std::set<K> kCompleted = make({K::Affirm, K::Negate, K::Backward, K::GoToStep}, true);
  static const std::set<K> kHalt = {};
  switch (state.sub) {
    case SubState::Welcome: return kWelcome;
    case SubState::Clarification: return kClarification;
    case SubState::Catalog: return kCatalog;
    case SubState::Comparison: return kComparison;
    case SubState::Overview: return kOverview;
    case SubState::Step: return kStep;
    case SubState::Completed: return kCompleted;
    case SubState::Halt: return kHalt;
  }
  return kHalt;
}

bool is_allowed(const DialogueState& state, IntentKind kind) {
  return allowed_intents(state).count(kind) > 0;
}

IntentSet filter_by_state(const IntentSet& intents, const DialogueState& state) {
  IntentSet out = intents;
  std::erase_if(out.labels, [&](const IntentLabel& l) { return !is_allowed(state, l.kind()); });
  if (out.labels.empty()) out.labels = {IntentLabel(IntentKind::Ignore)};
  return out;
}

// ---------------------------------------------------------------------------
// Task name extraction

namespace {

std::vector<std::vector<std::string>> phrase_table(std::initializer_list<const char*> phrases) {
  std::vector<std::vector<std::string>> out;
  for (const char* p : phrases) out.push_back(split_words(p));
  // Longest first so "how to" loses to "i want to know how to".
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return out;
}

}  // namespace

std::optional<std::string> extract_task_name(std::string_view utterance) {
  static const auto kLeading = phrase_table({
      "no", "nope", "nah", "yes", "yeah", "yep", "ok", "okay", "well", "um", "uh", "hmm", "so", "alexa",
      "sure", "alright", "all right", "sounds good", "sounds great", "that sounds great", "of course",
      "go ahead", "perfect", "great", "yes please", "no way", "no thanks", "no thank you", "not really",
      "i don't think so", "i don't", "forget it", "never mind", "nevermind", "cancel that",
      "hey", "please", "actually", "oh", "now", "instead", "then", "and", "but", "like", "also",
      "i want to know how to", "i'd like to know how to", "i would like to know how to",
      "i want to learn how to", "i'd like to learn how to", "i want to learn to", "i wanna know how to",
      "i wanna learn how to", "i want to", "i wanna", "i would like to", "i'd like to", "i need to",
      "i need", "i want", "i would like", "i'd like", "i'd love to", "i would love to",
      "can you tell me how to", "can you show me how to", "can you teach me how to",
      "could you tell me how to", "could you show me how to", "could you teach me how to",
      "can you help me", "could you help me", "can you", "could you", "would you",
      "tell me how to", "show me how to", "teach me how to", "help me", "help me to",
      "how do i", "how can i", "how should i", "how would i", "how to", "how do you", "how do we",
      "how can we", "let's", "lets", "let me", "let us", "find me", "find", "search for", "search",
      "look up", "look for", "show me", "give me", "get me", "i'm looking for", "im looking for",
      "looking for", "i am looking for", "is there", "do you have", "what about", "how about",
      "a recipe for", "recipe for", "recipes for", "a recipe for making", "the recipe for",
      "a good recipe for", "some recipes for", "a recipe", "recipes", "recipe", "some", "a good",
      "instructions for", "instructions on how to", "a guide to", "a guide for", "a tutorial on",
      "a tutorial on how to", "directions for", "steps to", "the steps to", "what's the best way to",
      "what is the best way to", "the best way to", "what's a good way to", "a way to", "ways to",
      "to", "try", "trying to", "try to", "know how to", "learn how to", "learn to", "me",
  });
  static const auto kTrailing = phrase_table({
      "recipe", "recipes", "for me", "please", "alexa", "thanks", "thank you", "today", "tonight",
      "now", "right now", "instructions", "a recipe", "for dinner tonight", "for tonight", "with me",
      "for us", "step by step", "please alexa", "um", "uh", "ok", "okay",
  });

  auto words = split_words(strip_disfluencies(utterance));
  std::size_t begin = 0;
  std::size_t end = words.size();
  auto matches_at = [&](const std::vector<std::string>& phrase, std::size_t pos) {
    return pos + phrase.size() <= end &&
           std::equal(phrase.begin(), phrase.end(), words.begin() + static_cast<std::ptrdiff_t>(pos));
  };
  for (bool changed = true; changed && begin < end;) {
    changed = false;
    for (const auto& p : kLeading) {
      if (matches_at(p, begin)) {
        begin += p.size();
        changed = true;
        break;
      }
    }
  }
  for (bool changed = true; changed && begin < end;) {
    changed = false;
    for (const auto& p : kTrailing) {
      if (end - begin >= p.size() && p.size() <= end && matches_at(p, end - p.size())) {
        end -= p.size();
        changed = true;
        break;
      }
    }
  }
  if (begin >= end) return std::nullopt;
  std::vector<std::string> span(words.begin() + static_cast<std::ptrdiff_t>(begin),
                                words.begin() + static_cast<std::ptrdiff_t>(end));
  return text::join(span, " ");
}

// ---------------------------------------------------------------------------
// Domain classifier

double DomainClassifier::cooking_score(std::string_view task_name) const {
  return model_.probability(0, featurizer_.transform(task_name));
}

Domain DomainClassifier::classify(std::string_view task_name) const {
  if (text::normalize_utterance(task_name).empty()) throw EmptyInput("task name is blank");
  return cooking_score(task_name) >= 0.5 ? Domain::Cooking : Domain::DIY;
}

Json DomainClassifier::to_json() const {
  return Json{{"version", kIntentModelVersion}, {"featurizer", featurizer_.to_json()}, {"linear", model_.to_json()}};
}

DomainClassifier DomainClassifier::from_json(const Json& j) {
  return DomainClassifier(NgramFeaturizer::from_json(j.at("featurizer")), LinearOvR::from_json(j.at("linear")));
}

// ---------------------------------------------------------------------------
// Simulator

void to_json(Json& j, const LabeledUtterance& v) {
  j = Json{{"text", v.text}, {"labels", v.labels}};
  if (v.task_name) j["task_name"] = *v.task_name;
  if (v.domain) j["domain"] = taco::to_string(*v.domain);
}

void from_json(const Json& j, LabeledUtterance& v) {
  v.text = j.at("text").get<std::string>();
  v.labels = j.at("labels").get<std::vector<std::string>>();
  v.task_name.reset();
  v.domain.reset();
  if (j.contains("task_name")) v.task_name = j.at("task_name").get<std::string>();
  if (j.contains("domain")) v.domain = domain_from_string(j.at("domain").get<std::string>());
}

SimulatorSpec parse_simulator_spec(const Json& j) {
  SimulatorSpec spec;
  spec.templates = j.at("templates").get<std::map<std::string, std::vector<std::string>>>();
  spec.slot_values = j.at("slot_values").get<std::map<std::string, std::vector<std::string>>>();
  spec.noise_tokens = j.value("noise_tokens", std::vector<std::string>{});
  if (j.contains("domain_slots"))
    for (const auto& [slot, d] : j.at("domain_slots").items())
      spec.domain_slots[slot] = domain_from_string(d.get<std::string>());
  spec.mix_probability = j.value("mix_probability", spec.mix_probability);
  spec.noise_probability = j.value("noise_probability", spec.noise_probability);
  spec.intent_labels = j.value("intent_labels", true);
  validate_simulator_spec(spec);
  return spec;
}

SimulatorSpec load_simulator_spec(const std::filesystem::path& path) {
  return parse_simulator_spec(read_json(path));
}

namespace {

std::vector<std::string> placeholders(const std::string& tmpl) {
  static const std::regex kSlot("\\{([a-z_]+)\\}");
  std::vector<std::string> out;
  for (auto it = std::sregex_iterator(tmpl.begin(), tmpl.end(), kSlot); it != std::sregex_iterator(); ++it)
    out.push_back((*it)[1].str());
  return out;
}

struct Filled {
  std::string text;
  std::optional<std::string> span;
  std::optional<Domain> domain;
};

Filled fill_template(const SimulatorSpec& spec, const std::string& tmpl, Rng& rng) {
  Filled f;
  std::string out;
  std::size_t span_begin = std::string::npos;
  for (std::size_t i = 0; i < tmpl.size(); ++i) {
    char c = tmpl[i];
    if (c == '<') {
      span_begin = out.size();
    } else if (c == '>') {
      if (span_begin != std::string::npos) f.span = out.substr(span_begin);
      span_begin = std::string::npos;
    } else if (c == '{') {
      auto close = tmpl.find('}', i);
      if (close == std::string::npos) throw SpecError("unterminated placeholder in '" + tmpl + "'");
      auto slot = tmpl.substr(i + 1, close - i - 1);
      auto it = spec.slot_values.find(slot);
      if (it == spec.slot_values.end() || it->second.empty())
        throw SpecError("placeholder {" + slot + "} has no slot values");
      out += it->second[rng.index(it->second.size())];
      if (auto d = spec.domain_slots.find(slot); d != spec.domain_slots.end()) f.domain = d->second;
      i = close;
    } else {
      out.push_back(c);
    }
  }
  f.text = out;
  if (f.span) f.span = text::normalize_utterance(*f.span);
  return f;
}

bool composable_head(const std::string& label) { return label == "affirm" || label == "negate"; }
bool composable_tail(const std::string& label) {
  return label == "task_request" || label == "navigation" || label == "detail_request" ||
         label == "repeat" || label == "question" || label == "task_complete" || label == "list" ||
         label == "timer";
}

}  // namespace

void validate_simulator_spec(const SimulatorSpec& spec) {
  for (const auto& [label, templates] : spec.templates) {
    if (spec.intent_labels && label != "ignore" &&
        std::find(coarse_labels().begin(), coarse_labels().end(), label) == coarse_labels().end())
      throw SpecError("unknown simulator label '" + label + "'");
    for (const auto& t : templates)
      for (const auto& slot : placeholders(t)) {
        auto it = spec.slot_values.find(slot);
        if (it == spec.slot_values.end() || it->second.empty())
          throw SpecError("template '" + t + "' uses {" + slot + "} without slot values");
      }
  }
}

const std::vector<std::string>& connectives() {
  static const std::vector<std::string> kConnectives = {", ", " and ", ". "};
  return kConnectives;
}

std::pair<SimulatorSpec, SimulatorSpec> split_templates(const SimulatorSpec& spec, double holdout_fraction,
                                                        std::uint64_t seed) {
  SimulatorSpec train = spec;
  SimulatorSpec held = spec;
  Rng rng(seed);
  for (const auto& [label, templates] : spec.templates) {
    auto shuffled = templates;
    rng.shuffle(shuffled.begin(), shuffled.end());
    std::size_t n_hold = templates.size() < 2
                             ? 0
                             : std::max<std::size_t>(1, static_cast<std::size_t>(holdout_fraction * templates.size() + 0.5));
    held.templates[label].assign(shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(n_hold));
    train.templates[label].assign(shuffled.begin() + static_cast<std::ptrdiff_t>(n_hold), shuffled.end());
  }
  std::erase_if(held.templates, [](const auto& kv) { return kv.second.empty(); });
  return {train, held};
}

std::vector<LabeledUtterance> simulate_training_data(const SimulatorSpec& spec, int count, std::uint64_t seed) {
  if (count <= 0) throw SpecError("count must be positive");
  validate_simulator_spec(spec);
  std::vector<std::string> labels;
  for (const auto& [label, templates] : spec.templates)
    if (!templates.empty()) labels.push_back(label);
  if (labels.empty()) throw SpecError("simulator spec has no templates");
  std::vector<std::string> heads, tails;
  for (const auto& l : labels) {
    if (composable_head(l)) heads.push_back(l);
    if (composable_tail(l)) tails.push_back(l);
  }

  Rng rng(seed);
  std::vector<LabeledUtterance> out;
  out.reserve(static_cast<std::size_t>(count));
  auto draw = [&](const std::string& label) {
    const auto& ts = spec.templates.at(label);
    return fill_template(spec, ts[rng.index(ts.size())], rng);
  };
  for (int n = 0; n < count; ++n) {
    LabeledUtterance u;
    bool mix = !heads.empty() && !tails.empty() && rng.chance(spec.mix_probability);
    if (mix) {
      const auto& head = heads[rng.index(heads.size())];
      const auto& tail = tails[rng.index(tails.size())];
      auto a = draw(head);
      auto b = draw(tail);
      const auto& conn = connectives()[rng.index(connectives().size())];
      u.text = a.text + conn + b.text;
      u.labels = {head, tail};
      u.task_name = b.span;
      u.domain = b.domain;
    } else {
      const auto& label = labels[rng.index(labels.size())];
      auto a = draw(label);
      u.text = a.text;
      u.labels = {label};
      u.task_name = a.span;
      u.domain = a.domain;
    }
    if (!spec.noise_tokens.empty() && rng.chance(spec.noise_probability)) {
      auto words = split_words(u.text);
      const auto& noise = spec.noise_tokens[rng.index(spec.noise_tokens.size())];
      // Noise goes at the front or between words, never inside the task span.
      std::size_t pos = rng.chance(0.5) || words.size() < 2 ? 0 : rng.index(words.size());
      if (u.task_name && pos > 0) pos = 0;
      words.insert(words.begin() + static_cast<std::ptrdiff_t>(pos), noise);
      u.text = text::join(words, " ");
    }
    std::sort(u.labels.begin(), u.labels.end());
    out.push_back(std::move(u));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Training

IntentModel train_intent_model(const std::vector<LabeledUtterance>& data, const IntentTrainConfig& config) {
  const auto& labels = coarse_labels();
  if (data.empty()) throw InsufficientData(labels.front());
  std::vector<std::string> texts;
  std::vector<std::vector<int>> targets;
  for (const auto& d : data) {
    texts.push_back(strip_disfluencies(d.text));
    std::vector<int> t;
    for (const auto& l : d.labels) {
      auto it = std::find(labels.begin(), labels.end(), l);
      if (it != labels.end()) t.push_back(static_cast<int>(it - labels.begin()));
    }
    targets.push_back(std::move(t));
  }
  NgramFeaturizer featurizer(config.ngrams);
  featurizer.fit(texts);
  std::vector<SparseVec> xs;
  xs.reserve(texts.size());
  for (const auto& t : texts) xs.push_back(featurizer.transform(t));
  auto linear = train_ovr(xs, targets, labels, featurizer.size(), config.optimizer, config.min_examples_per_label);
  return IntentModel(default_pattern_rules(), std::move(featurizer), std::move(linear));
}

DomainClassifier train_domain_classifier(const std::vector<LabeledUtterance>& data, const IntentTrainConfig& config) {
  std::vector<std::string> names;
  std::vector<std::vector<int>> targets;
  for (const auto& d : data) {
    if (!d.task_name || !d.domain || d.task_name->empty()) continue;
    names.push_back(*d.task_name);
    targets.push_back(*d.domain == Domain::Cooking ? std::vector<int>{0} : std::vector<int>{});
  }
  int diy = static_cast<int>(std::count_if(targets.begin(), targets.end(), [](const auto& t) { return t.empty(); }));
  if (diy < config.min_examples_per_label) throw InsufficientData("diy");
  NgramFeaturizer featurizer(config.ngrams);
  featurizer.fit(names);
  std::vector<SparseVec> xs;
  for (const auto& n : names) xs.push_back(featurizer.transform(n));
  auto linear = train_ovr(xs, targets, {"cooking"}, featurizer.size(), config.optimizer, config.min_examples_per_label);
  return DomainClassifier(std::move(featurizer), std::move(linear));
}

}  // namespace taco::nlu
