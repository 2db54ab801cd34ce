#!/usr/bin/env python3
"""Regenerates include/aumol/eval/spelling_table.hpp (British -> American)."""

import pathlib
import sys

# -our -> -or, with the inflections each stem takes.
OUR = {
    "colour": ["", "s", "ed", "ing", "ful", "less", "ation"],
    "favour": ["", "s", "ed", "ing", "able", "ably", "ite", "ites"],
    "honour": ["", "s", "ed", "ing", "able"],
    "labour": ["", "s", "ed", "ing", "er", "ers"],
    "neighbour": ["", "s", "ing", "hood", "ly"],
    "behaviour": ["", "s", "al", "ally"],
    "flavour": ["", "s", "ed", "ing", "ful", "less"],
    "humour": ["", "s", "ed", "less"],
    "rumour": ["", "s", "ed"],
    "tumour": ["", "s"],
    "odour": ["", "s", "less"],
    "vapour": ["", "s"],
    "harbour": ["", "s", "ed", "ing"],
    "armour": ["", "ed", "y"],
    "vigour": [""],
    "rigour": [""],
    "savour": ["", "s", "ed", "ing", "y"],
    "splendour": [""],
    "candour": [""],
    "clamour": ["", "s", "ed", "ing"],
    "endeavour": ["", "s", "ed", "ing"],
    "fervour": [""],
    "parlour": ["", "s"],
    "valour": [""],
    "rancour": [""],
    "saviour": ["", "s"],
    "demeanour": [""],
    "arbour": ["", "s"],
}

# -ise -> -ize verbs; suffixes cover the verb forms and -isation nouns.
ISE_VERB = ["ise", "ised", "ises", "ising"]
ISE_NOUN = ["isation", "isations"]
ISE = {
    "organ": ISE_VERB + ISE_NOUN + ["iser", "isers"],
    "real": ISE_VERB + ISE_NOUN,
    "recogn": ISE_VERB + ["isable"],
    "apolog": ISE_VERB,
    "critic": ISE_VERB,
    "emphas": ISE_VERB,
    "summar": ISE_VERB,
    "special": ISE_VERB + ISE_NOUN,
    "standard": ISE_VERB + ISE_NOUN,
    "normal": ISE_VERB + ISE_NOUN,
    "optim": ISE_VERB + ISE_NOUN,
    "minim": ISE_VERB + ISE_NOUN,
    "maxim": ISE_VERB,
    "author": ISE_VERB + ISE_NOUN,
    "character": ISE_VERB + ISE_NOUN,
    "visual": ISE_VERB + ISE_NOUN,
    "util": ISE_VERB + ["isation"],
    "random": ISE_VERB + ISE_NOUN,
    "categor": ISE_VERB + ISE_NOUN,
    "mobil": ISE_VERB + ["isation"],
    "steril": ISE_VERB + ["isation", "iser"],
    "neutral": ISE_VERB + ["isation"],
    "custom": ISE_VERB + ["isation"],
    "priorit": ISE_VERB + ["isation"],
    "hospital": ISE_VERB + ISE_NOUN,
    "immun": ISE_VERB + ISE_NOUN,
    "stabil": ISE_VERB + ["isation", "iser", "isers"],
    "civil": ["isation", "isations", "ised"],
    "memor": ISE_VERB,
    "symbol": ISE_VERB,
    "sympath": ISE_VERB,
    "final": ISE_VERB,
    "central": ISE_VERB + ["isation"],
    "modern": ISE_VERB + ["isation"],
    "industrial": ISE_VERB + ["isation"],
    "general": ISE_VERB + ISE_NOUN,
    "capital": ISE_VERB + ["isation"],
    "local": ISE_VERB + ["isation"],
    "vocal": ISE_VERB,
    "familiar": ISE_VERB,
    "jeopard": ISE_VERB,
    "harmon": ISE_VERB,
    "agon": ISE_VERB,
    "fertil": ISE_VERB + ["isation", "iser", "isers"],
    "catheter": ISE_VERB + ["isation"],
    "metabol": ISE_VERB,
    "ion": ISE_VERB + ["isation"],
    "pressur": ISE_VERB,
    "synchron": ISE_VERB + ["isation"],
    "sensit": ISE_VERB + ["isation"],
    "desensit": ISE_VERB + ["isation"],
    "epitom": ISE_VERB,
    "scrutin": ISE_VERB,
    "theor": ISE_VERB,
    "patron": ISE_VERB,
    "computer": ISE_VERB,
    "digit": ISE_VERB + ["isation"],
    "individual": ISE_VERB,
    "personal": ISE_VERB + ["isation"],
    "colon": ISE_VERB + ["isation"],
    "polar": ISE_VERB + ["isation"],
    "magnet": ISE_VERB,
    "oxid": ISE_VERB,
    "crystal": ISE_VERB + ["isation"],
    "euthan": ISE_VERB,
    "hypothes": ISE_VERB,
    "legal": ISE_VERB + ["isation"],
    "global": ISE_VERB + ["isation"],
    "trivial": ISE_VERB,
    "revital": ISE_VERB,
}

# Stems ending in -yse -> -yze.
YSE = {
    "analy": ["se", "sed", "ses", "sing", "ser", "sers"],
    "paraly": ["se", "sed", "sing"],
    "cataly": ["se", "sed", "ses", "sing"],
    "dialy": ["se", "sed", "sing"],
    "hydroly": ["se", "sed", "sing"],
    "electroly": ["se", "sed"],
}

# -re -> -er nouns (plus plurals where used).
RE = ["centre", "metre", "litre", "fibre", "theatre", "calibre", "spectre", "sombre", "meagre", "lustre", "sabre",
      "sceptre", "millimetre", "centimetre", "kilometre", "millilitre", "decilitre", "micrometre", "nanometre",
      "epicentre", "goitre", "mitre", "ochre", "reconnoitre"]
RE_PLURAL = ["centre", "metre", "litre", "fibre", "theatre", "millimetre", "centimetre", "kilometre", "millilitre",
             "goitre"]

# ae / oe medical and scientific spellings.
MEDICAL = {
    "anaemia": "anemia", "anaemic": "anemic", "anaesthesia": "anesthesia", "anaesthetic": "anesthetic",
    "anaesthetics": "anesthetics", "anaesthetist": "anesthetist", "haemoglobin": "hemoglobin",
    "haemorrhage": "hemorrhage", "haemorrhages": "hemorrhages", "haemorrhagic": "hemorrhagic",
    "haemorrhoids": "hemorrhoids", "haematology": "hematology", "haematologist": "hematologist",
    "haematoma": "hematoma", "haematuria": "hematuria", "haemodialysis": "hemodialysis", "haemophilia": "hemophilia",
    "haemostasis": "hemostasis", "haemolysis": "hemolysis", "haemolytic": "hemolytic", "haem": "heme",
    "hypoglycaemia": "hypoglycemia", "hyperglycaemia": "hyperglycemia", "hypoglycaemic": "hypoglycemic",
    "hyperglycaemic": "hyperglycemic", "glycaemic": "glycemic", "hypokalaemia": "hypokalemia",
    "hyperkalaemia": "hyperkalemia", "hyponatraemia": "hyponatremia", "hypernatraemia": "hypernatremia",
    "hypocalcaemia": "hypocalcemia", "hypercalcaemia": "hypercalcemia", "hypoxaemia": "hypoxemia",
    "ischaemia": "ischemia", "ischaemic": "ischemic", "leukaemia": "leukemia", "septicaemia": "septicemia",
    "bacteraemia": "bacteremia", "toxaemia": "toxemia", "uraemia": "uremia", "viraemia": "viremia",
    "oedema": "edema", "oedematous": "edematous", "oesophagus": "esophagus", "oesophageal": "esophageal",
    "oesophagitis": "esophagitis", "oestrogen": "estrogen", "oestrogens": "estrogens", "oestradiol": "estradiol",
    "paediatric": "pediatric", "paediatrics": "pediatrics", "paediatrician": "pediatrician",
    "orthopaedic": "orthopedic", "orthopaedics": "orthopedics", "gynaecology": "gynecology",
    "gynaecological": "gynecological", "gynaecologist": "gynecologist", "foetus": "fetus", "foetal": "fetal",
    "diarrhoea": "diarrhea", "amenorrhoea": "amenorrhea", "dysmenorrhoea": "dysmenorrhea", "gonorrhoea": "gonorrhea",
    "rhinorrhoea": "rhinorrhea", "steatorrhoea": "steatorrhea", "coeliac": "celiac", "faeces": "feces",
    "faecal": "fecal", "caesarean": "cesarean", "aetiology": "etiology", "aetiological": "etiological",
    "dyspnoea": "dyspnea", "apnoea": "apnea", "orthopnoea": "orthopnea",
    "tachypnoea": "tachypnea", "oesophagectomy": "esophagectomy", "haemoptysis": "hemoptysis",
    "haematemesis": "hematemesis", "haemangioma": "hemangioma", "haemochromatosis": "hemochromatosis",
    "haemodynamic": "hemodynamic", "anaemias": "anemias", "leukaemias": "leukemias", "oedemas": "edemas",
    "encyclopaedia": "encyclopedia", "archaeology": "archeology", "mediaeval": "medieval", "manoeuvre": "maneuver",
    "manoeuvres": "maneuvers", "manoeuvred": "maneuvered", "manoeuvring": "maneuvering", "palaeontology": "paleontology",
    "anaesthetised": "anesthetized", "anaesthetise": "anesthetize", "anaesthetising": "anesthetizing",
}

# -ence -> -ense and assorted single words.
MISC = {
    "defence": "defense", "defences": "defenses", "offence": "offense", "offences": "offenses",
    "pretence": "pretense", "licence": "license", "licences": "licenses", "grey": "gray", "greys": "grays",
    "greyish": "grayish", "tyre": "tire", "tyres": "tires", "programme": "program", "programmes": "programs",
    "cheque": "check", "cheques": "checks", "aluminium": "aluminum", "mould": "mold", "moulds": "molds",
    "mouldy": "moldy", "moulded": "molded", "plough": "plow", "ploughs": "plows", "sulphur": "sulfur",
    "sulphate": "sulfate", "sulphates": "sulfates", "sulphide": "sulfide", "sulphonamide": "sulfonamide",
    "sulphonylurea": "sulfonylurea", "sulphonylureas": "sulfonylureas", "kerb": "curb", "kerbs": "curbs",
    "jewellery": "jewelry", "draught": "draft", "draughts": "drafts", "draughty": "drafty", "fulfil": "fulfill",
    "fulfils": "fulfills", "fulfilment": "fulfillment", "enrol": "enroll", "enrols": "enrolls",
    "enrolment": "enrollment", "instil": "instill", "instils": "instills", "distil": "distill", "distils": "distills",
    "skilful": "skillful", "skilfully": "skillfully", "wilful": "willful", "wilfully": "willfully",
    "ageing": "aging", "judgement": "judgment", "judgements": "judgments", "acknowledgement": "acknowledgment",
    "acknowledgements": "acknowledgments", "catalogue": "catalog", "catalogues": "catalogs",
    "catalogued": "cataloged", "analogue": "analog", "analogues": "analogs",
    "pyjamas": "pajamas", "moustache": "mustache", "sceptical": "skeptical", "sceptic": "skeptic",
    "scepticism": "skepticism", "cosy": "cozy", "practise": "practice", "practised": "practiced", "practises": "practices", "practising": "practicing",
    "gaol": "jail", "artefact": "artifact", "artefacts": "artifacts", 
    "chequered": "checkered", "connexion": "connection", "grovelling": "groveling", "kilogramme": "kilogram",
    "kilogrammes": "kilograms", "gramme": "gram", "grammes": "grams", "speciality": "specialty",
    "specialities": "specialties", "whisky": "whiskey", "yoghurt": "yogurt", "yoghurts": "yogurts",
    "cancelled": "canceled", "cancelling": "canceling", "labelled": "labeled", "labelling": "labeling",
    "modelled": "modeled", "modelling": "modeling", "travelled": "traveled", "travelling": "traveling",
    "traveller": "traveler", "travellers": "travelers", "levelled": "leveled", "levelling": "leveling",
    "signalled": "signaled", "signalling": "signaling", "totalled": "totaled", "totalling": "totaling",
    "fuelled": "fueled", "fuelling": "fueling", "counselling": "counseling", "counselled": "counseled",
    "counsellor": "counselor", "counsellors": "counselors", "dialled": "dialed", "dialling": "dialing",
    "marvellous": "marvelous", "jewelled": "jeweled", "tunnelled": "tunneled", "channelled": "channeled",
    "channelling": "channeling", "quarrelled": "quarreled", "woollen": "woolen",
    "titre": "titer", "titres": "titers", "appal": "appall", "appals": "appalls",
    "enthral": "enthrall", "foetuses": "fetuses", "paralysed": "paralyzed", "cauterise": "cauterize",
    "cauterised": "cauterized", "sanitise": "sanitize",
    "sanitised": "sanitized", "sanitiser": "sanitizer", "sanitisers": "sanitizers", "tranquilliser": "tranquilizer",
    "tranquillisers": "tranquilizers", "tranquillity": "tranquility", "vaporise": "vaporize", "vaporiser": "vaporizer",
    "nebuliser": "nebulizer", "nebulisers": "nebulizers", "nebulised": "nebulized", "immobilise": "immobilize",
    "immobilised": "immobilized", "immobilisation": "immobilization", "haemostat": "hemostat",
}


def build():
    pairs = {}

    def add(gb, us):
        pairs[gb] = us

    for stem, suffixes in OUR.items():
        for suf in suffixes:
            add(stem + suf, stem[:-3] + "or" + suf)
    for stem, suffixes in ISE.items():
        for suf in suffixes:
            add(stem + suf, stem + suf.replace("is", "iz", 1))
    for stem, suffixes in YSE.items():
        for suf in suffixes:
            add(stem + suf, stem + "z" + suf[1:])
    for word in RE:
        add(word, word[:-2] + "er")
    for word in RE_PLURAL:
        add(word + "s", word[:-2] + "ers")
    for gb, us in MEDICAL.items():
        add(gb, us)
    for gb, us in MISC.items():
        add(gb, us)
    bad = sorted(set(pairs) & set(pairs.values()))
    if bad:
        sys.exit(f"values that are also keys: {bad}")
    return dict(sorted(pairs.items()))


def main():
    pairs = build()
    out = pathlib.Path(__file__).resolve().parent.parent / "include/aumol/eval/spelling_table.hpp"
    lines = [
        "#pragma once",
        "",
        "// Generated by tools/gen_spelling_table.py; edit the script, not this file.",
        "",
        "#include <array>",
        "#include <string_view>",
        "#include <utility>",
        "",
        "namespace aumol::eval {",
        "",
        "/// British -> American spellings, sorted by key. No value is also a key.",
        f"inline constexpr std::array<std::pair<std::string_view, std::string_view>, {len(pairs)}> kBritishToAmerican = {{{{",
    ]
    lines += [f'    {{"{gb}", "{us}"}},' for gb, us in pairs.items()]
    lines += ["}};", "", "}  // namespace aumol::eval", ""]
    out.write_text("\n".join(lines))
    print(f"{len(pairs)} pairs -> {out}")


if __name__ == "__main__":
    main()
