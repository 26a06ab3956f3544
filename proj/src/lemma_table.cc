#include <map>
#include <sstream>
#include <string>

#include "qalign/lemma.h"

namespace qalign {

namespace {

// Irregular verbs: "lemma form form ...". Every listed form maps to the
// first word of its line.
constexpr const char* kIrregularVerbs[] = {
    "be is are was were been being am 's 're 'm",
    "have has had having 've",
    "do does did done doing",
    "go goes went gone going",
    "arise arose arisen",
    "awake awoke awoken",
    "bear bore borne born",
    "beat beaten",
    "become became",
    "begin began begun",
    "bend bent",
    "bet",
    "bind bound",
    "bite bit bitten",
    "bleed bled",
    "blow blew blown",
    "break broke broken",
    "breed bred",
    "bring brought",
    "build built",
    "burn burnt",
    "burst",
    "buy bought",
    "catch caught",
    "choose chose chosen",
    "cling clung",
    "come came",
    "cost",
    "creep crept",
    "cut",
    "deal dealt",
    "dig dug",
    "dive dove",
    "draw drew drawn",
    "dream dreamt",
    "drink drank drunk",
    "drive drove driven",
    "eat ate eaten",
    "fall fell fallen",
    "feed fed",
    "feel felt",
    "fight fought",
    "find found",
    "flee fled",
    "fling flung",
    "fly flew flown flies",
    "forbid forbade forbidden",
    "forecast",
    "forget forgot forgotten",
    "forgive forgave forgiven",
    "freeze froze frozen",
    "get got gotten",
    "give gave given",
    "grind",
    "grow grew grown",
    "hang hung hanged hanging",
    "hear heard",
    "hide hid hidden",
    "hit",
    "hold held",
    "hurt",
    "keep kept",
    "kneel knelt",
    "know knew known",
    "lay laid",
    "lead led",
    "lean leant",
    "leap leapt",
    "learn learnt",
    "leave left",
    "lend lent",
    "let",
    "lie lain lying lied",
    "light lit",
    "lose lost",
    "make made",
    "mean meant",
    "meet met",
    "mislead misled",
    "mistake mistook mistaken",
    "overcome overcame",
    "overtake overtook overtaken",
    "overthrow overthrew overthrown",
    "pay paid",
    "prove proven",
    "put",
    "quit",
    "read",
    "rebuild rebuilt",
    "rid",
    "ride rode ridden",
    "ring rang rung",
    "rise rose risen",
    "run ran",
    "say said",
    "see saw seen",
    "seek sought",
    "sell sold",
    "send sent",
    "set",
    "sew sewn",
    "shake shook shaken",
    "shed",
    "shine shone",
    "shoot shot",
    "show shown",
    "shrink shrank shrunk",
    "shut",
    "sing sang sung",
    "sink sank sunk",
    "sit sat",
    "slay slew slain",
    "sleep slept",
    "slide slid",
    "sling slung",
    "speak spoke spoken",
    "speed sped",
    "spend spent",
    "spin spun",
    "spit spat",
    "split",
    "spread",
    "spring sprang sprung",
    "stand stood",
    "steal stole stolen",
    "stick stuck",
    "sting stung",
    "stink stank stunk",
    "stride strode stridden",
    "strike struck stricken",
    "string strung",
    "strive strove striven",
    "swear swore sworn",
    "sweep swept",
    "swell swollen",
    "swim swam swum",
    "swing swung",
    "take took taken",
    "teach taught",
    "tear tore torn",
    "tell told",
    "think thought",
    "throw threw thrown",
    "thrust",
    "tread trod trodden",
    "undergo underwent undergone",
    "understand understood",
    "undertake undertook undertaken",
    "upset",
    "uphold upheld",
    "wake woke woken",
    "wear wore worn",
    "weave wove woven",
    "weep wept",
    "win won",
    "wind",
    "withdraw withdrew withdrawn",
    "withhold withheld",
    "withstand withstood",
    "wring wrung",
    "write wrote written",
    "die dying",
    "tie tying",
    "agree agreed",
    "free freed",
    "guarantee guaranteed",
    "decree decreed",
    "referee refereed",
    "add added adding",
    "create created creating",
    "persuade persuaded persuading",
    "taste tasted tasting",
    "waste wasted wasting",
    "paste pasted pasting",
    "bathe bathed bathing",
    "breathe breathed breathing",
    "clothe clothed clothing",
    "soothe soothed soothing",
    "loathe loathed loathing",
    "invite invited inviting",
    "excite excited exciting",
    "unite united uniting",
    "cite cited citing",
    "recite recited reciting",
    "ignite ignited igniting",
    "phone phoned phoning",
    "postpone postponed postponing",
    "condone condoned condoning",
    "clone cloned cloning",
    "focus focused focusing focuses",
    "bias biased",
    "develop developed developing",
    "envelop enveloped enveloping",
    "gallop galloped galloping",
    "pilot piloted piloting",
    "pivot pivoted pivoting",
    "honor honored honoring",
    "color colored coloring",
    "favor favored favoring",
    "labor labored laboring",
    "anchor anchored anchoring",
    "monitor monitored monitoring",
    "mirror mirrored mirroring",
    "sponsor sponsored sponsoring",
    "censor censored censoring",
    "tailor tailored tailoring",
    "author authored authoring",
    "mentor mentored mentoring",
    "murmur murmured murmuring",
    "control controlled controlling",
    "patrol patrolled patrolling",
    "compel compelled compelling",
    "expel expelled expelling",
    "propel propelled propelling",
    "rebel rebelled rebelling",
    "repel repelled repelling",
    "excel excelled excelling",
    "dispel dispelled dispelling",
    "extol extolled extolling",
    "travel travelled travelling",
    "cancel cancelled cancelling",
    "label labelled labelling",
    "model modelled modelling",
    "fuel fuelled fuelling",
    "signal signalled signalling",
    "total totalled totalling",
    "bang banged banging",
    "clang clanged clanging",
    "ache aches ached aching",
    "cache caches cached caching",
    "complete completed completing",
    "delete deleted deleting",
    "compete competed competing",
    "deplete depleted depleting",
    "panic panicked panicking",
    "owe owed owing",
    "guide guided guiding",
};

// Irregular nouns and forms the suffix rules would damage.
constexpr std::pair<const char*, const char*> kOtherForms[] = {
    {"men", "man"},           {"women", "woman"},
    {"children", "child"},    {"people", "people"},
    {"feet", "foot"},         {"teeth", "tooth"},
    {"mice", "mouse"},        {"geese", "goose"},
    {"oxen", "ox"},           {"lives", "life"},
    {"wives", "wife"},        {"knives", "knife"},
    {"wolves", "wolf"},       {"halves", "half"},
    {"shelves", "shelf"},     {"thieves", "thief"},
    {"leaves", "leave"},      {"loaves", "loaf"},
    {"calves", "calf"},       {"selves", "self"},
    {"crises", "crisis"},     {"analyses", "analysis"},
    {"theses", "thesis"},     {"bases", "base"},
    {"criteria", "criterion"}, {"phenomena", "phenomenon"},
    {"data", "data"},         {"media", "media"},
    {"heroes", "hero"},       {"potatoes", "potato"},
    {"tomatoes", "tomato"},   {"echoes", "echo"},
    {"vetoes", "veto"},       {"buses", "bus"},
    {"niches", "niche"},      {"headaches", "headache"},
    {"police", "police"},     {"news", "news"},
    {"series", "series"},     {"species", "species"},
    {"always", "always"},     {"perhaps", "perhaps"},
    {"towards", "towards"},   {"afterwards", "afterwards"},
    {"besides", "besides"},   {"sometimes", "sometimes"},
    {"whereas", "whereas"},   {"politics", "politics"},
    {"physics", "physics"},   {"economics", "economics"},
    {"mathematics", "mathematics"}, {"ethics", "ethics"},
    {"chaos", "chaos"},       {"lens", "lens"},
    {"this", "this"},         {"his", "his"},
    {"hers", "hers"},         {"its", "its"},
    {"ours", "ours"},         {"yours", "yours"},
    {"theirs", "theirs"},     {"us", "us"},
    {"during", "during"},     {"morning", "morning"},
    {"evening", "evening"},   {"nothing", "nothing"},
    {"something", "something"}, {"anything", "anything"},
    {"everything", "everything"}, {"ceiling", "ceiling"},
    {"wedding", "wedding"},   {"pudding", "pudding"},
    {"lightning", "lightning"}, {"awning", "awning"},
    {"hundred", "hundred"},   {"kindred", "kindred"},
    {"sacred", "sacred"},     {"naked", "naked"},
    {"wicked", "wicked"},     {"rugged", "rugged"},
    {"ragged", "ragged"},     {"crooked", "crooked"},
    {"wretched", "wretched"}, {"jagged", "jagged"},
    {"indeed", "indeed"},     {"need", "need"},
    {"speed", "speed"},       {"bleed", "bleed"},
    {"breed", "breed"},       {"proceed", "proceed"},
    {"succeed", "succeed"},   {"exceed", "exceed"},
    {"texas", "texas"},       {"kansas", "kansas"},
    {"christmas", "christmas"}, {"canvas", "canvas"},
    {"atlas", "atlas"},       {"alias", "alias"},
    {"overseas", "overseas"},
};

std::map<std::string, std::string> BuildTable() {
  std::map<std::string, std::string> table;
  for (const char* line : kIrregularVerbs) {
    std::istringstream in(line);
    std::string lemma;
    in >> lemma;
    table[lemma] = lemma;
    std::string form;
    while (in >> form) table[form] = lemma;
  }
  for (const auto& [form, lemma] : kOtherForms) table[form] = lemma;
  return table;
}

}  // namespace

const std::map<std::string, std::string>& LemmaExceptions() {
  static const std::map<std::string, std::string> table = BuildTable();
  return table;
}

}  // namespace qalign
