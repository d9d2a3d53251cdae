#!/usr/bin/env python3
"""Regenerates the sample data files under data/."""

import os

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, "..", "data")
os.makedirs(DATA, exist_ok=True)

ZWJ = "‍"
VIRAMA = "්"

# ---------------------------------------------------------------- sample.aff
aff = """SET UTF-8
TRY අආඇඈඉඊඋඌඑඒඔඕකඛගඝඟචඡජඣටඨඩඪණඬතථදධනඳපඵබභමඹයරලවශෂසහළෆාැෑිීුූෘෙේොෝෞං්
REP 4
REP ණ න
REP න ණ
REP ළ ල
REP ල ළ
PFX P Y 1
PFX P 0 අ .
SFX A Y 3
SFX A 0 ා .
SFX A 0 ට .
SFX A 0 ගෙන් .
SFX B Y 2
SFX B 0 ව .
SFX B 0 වෝ .
SFX C Y 1
SFX C 0 ව .
SFX D Y 4
SFX D 0 ම .
SFX D 0 ව .
SFX D 0 වට .
SFX D 0 තම .
SFX E Y 5
SFX E 0 ම .
SFX E 0 ව .
SFX E 0 වට .
SFX E 0 ත් .
SFX E 0 තම .
SFX F Y 4
SFX F 0 ම .
SFX F 0 ව .
SFX F 0 ත් .
SFX F 0 තම .
SFX G Y 4
SFX G 0 ම .
SFX G 0 ව .
SFX G 0 වට .
SFX G 0 වත් .
SFX H Y 3
SFX H 0 ම .
SFX H 0 ව .
SFX H 0 වම .
SFX I Y 5
SFX I 0 ම .
SFX I 0 ව .
SFX I 0 වම .
SFX I 0 වට .
SFX I 0 වත් .
SFX L Y 3
SFX L 0 වල .
SFX L 0 වලට .
SFX L 0 වලින් .
"""

words = [
    "අම්ම/A",
    "අංගනා/B",
    "මිහිර/P",
    "පිරිසිදු/PC",
    "විශාල/D",
    "වැඩි/E",
    "අවශ‍්ය/F",  # placeholder fixed below
    "අබිලි/G",
    "නාවකාලික/H",
    "සාමාන‍්ය/I",  # placeholder fixed below
    "කටයුතු/L",
    "ස්ථාන/L",
    "දිගට",
    "ම",
    "දරන",
    "එක",
    "බැවින්",
    "සභ",
    "සිදු",
    "වන",
    "අපේක්ෂා",
    "කිරීමට",
    "වර්ෂයේ",
    "ආරම්භක",
    "යටත්",
    "ව",
    "වූ",
    "ද",
    "ඉල්ලීම්",
    "සානුකම්පිත",
    "පරිදි",
    "ගෙදර",
    "මම",
    "කරනවා",
    "ලංකරනවා",
]
# conjunct spellings: consonant + virama + ZWJ + ya
words[6] = "අවශ" + VIRAMA + ZWJ + "ය/F"        # අවශ්‍ය
words[9] = "සාමාන" + VIRAMA + ZWJ + "ය/I"      # සාමාන්‍ය

dic = str(len(words)) + "\n" + "\n".join(words) + "\n"

# ------------------------------------------------------------ confusions.tsv
confusion_sets = [
    ["ි", "ී"],
    ["ු", "ූ"],
    ["ෙ", "ේ"],
    ["ො", "ෝ"],
    ["අ", "ආ"],
    ["ඉ", "ඊ"],
    ["උ", "ඌ"],
    ["එ", "ඒ"],
    ["ඔ", "ඕ"],
    ["න", "ණ"],
    ["ල", "ළ"],
    ["ශ", "ෂ", "ස"],
    ["ක", "ඛ"],
    ["ග", "ඝ"],
    ["ච", "ඡ"],
    ["ජ", "ඣ"],
    ["ට", "ඨ"],
    ["ඩ", "ඪ"],
    ["ත", "ථ"],
    ["ද", "ධ"],
    ["ප", "ඵ"],
    ["බ", "භ"],
]
confusions = "# one set per line: weight TAB member TAB member...\n"
confusions += "".join("0.5\t" + "\t".join(s) + "\n" for s in confusion_sets)

# -------------------------------------------------------- autofix_rules.tsv
signs = ["ා", "ැ", "ෑ", "ි", "ී", "ු", "ූ", "ෘ", "ෙ", "ේ", "ො", "ෝ", "ෞ"]
rules = ["# evident-error rewrite rules: pattern TAB replacement TAB scope"]
rules.append("අපේක්ෂක්ෂා\tඅපේක්ෂා\tWholeToken")
rules.append("# duplicated vowel signs")
for s in signs:
    rules.append(f"{s}{s}\t{s}\tAnywhere")
rules.append("# duplicated virama")
rules.append(f"{VIRAMA}{VIRAMA}\t{VIRAMA}\tAnywhere")
rules.append("# vowel sign directly after ZWJ: drop the ZWJ")
for s in signs:
    rules.append(f"{ZWJ}{s}\t{s}\tAnywhere")
autofix = "\n".join(rules) + "\n"

# --------------------------------------------------------------- sample.lexc
stems = [
    "අපේල්", "අනුමිතීන්", "අසීන්", "අර්ශ්ඤ", "අසමෝදගමි", "අළුකෙහෙල්",
    "ඇපල්", "ඉළක්", "ඊමේල්", "උදුවන්", "එඩින්",
]
suffix_entries = [
    ("+N+RT+UN+ACC", "ඊ"),
    ("+N+RT+UN+NOM", "ඊ"),
    ("+N+RT+UN+ACC+CJ", "උක්"),
    ("+N+RT+UN+NOM+CJ", "උක්"),
    ("+N+RT+UN+ACC+FN", "උසී"),
    ("+N+RT+UN+NOM+FN", "උසී"),
    ("+N+RT+UN+INT", "ඊමලින්"),
    ("+N+RT+UN+ABL", "ඊමලින්"),
    ("+N+RT+UN+INT+FN", "ඊමලින්"),
    ("+N+RT+UN+ABL+FN", "ඊමලින්"),
    ("+N+RT+UN+INT+CJ", "ඊමලින්"),
    ("+N+RT+UN+ABL+CJ", "ඊමලින්"),
]
lexc = ["!!!nouns.lexc!!!", "", "Multichar_Symbols N +RT +SG +DF +NOM +CJ +NOM +ACC", ""]
lexc += ["LEXICON Root", "NounUncountableConsEndStem;", ""]
lexc += ["LEXICON NounUncountableConsEndStem", ""]
lexc += [f"{s} NounUncountableConsEnd;" for s in stems]
lexc += ["", "LEXICON NounUncountableConsEnd", ""]
lexc += [f"{a}: {s} #;" for a, s in suffix_entries]
lexc_text = "\n".join(lexc) + "\n"

# ----------------------------------------------------------- frequencies.tsv
freq = """# word TAB count
දරන\t120
දිගට\t80
ම\t400
එක\t300
ව\t250
ද\t310
"""

for name, content in [
    ("sample.aff", aff),
    ("sample.dic", dic),
    ("confusions.tsv", confusions),
    ("autofix_rules.tsv", autofix),
    ("sample.lexc", lexc_text),
    ("frequencies.tsv", freq),
]:
    with open(os.path.join(DATA, name), "w", encoding="utf-8") as f:
        f.write(content)
    print("wrote", name)
