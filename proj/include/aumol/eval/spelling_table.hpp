#pragma once

// Generated by tools/gen_spelling_table.py; edit the script, not this file.

#include <array>
#include <string_view>
#include <utility>

namespace aumol::eval {

/// British -> American spellings, sorted by key. No value is also a key.
inline constexpr std::array<std::pair<std::string_view, std::string_view>, 721> kBritishToAmerican = {{
    {"acknowledgement", "acknowledgment"},
    {"acknowledgements", "acknowledgments"},
    {"aetiological", "etiological"},
    {"aetiology", "etiology"},
    {"ageing", "aging"},
    {"agonise", "agonize"},
    {"agonised", "agonized"},
    {"agonises", "agonizes"},
    {"agonising", "agonizing"},
    {"aluminium", "aluminum"},
    {"amenorrhoea", "amenorrhea"},
    {"anaemia", "anemia"},
    {"anaemias", "anemias"},
    {"anaemic", "anemic"},
    {"anaesthesia", "anesthesia"},
    {"anaesthetic", "anesthetic"},
    {"anaesthetics", "anesthetics"},
    {"anaesthetise", "anesthetize"},
    {"anaesthetised", "anesthetized"},
    {"anaesthetising", "anesthetizing"},
    {"anaesthetist", "anesthetist"},
    {"analogue", "analog"},
    {"analogues", "analogs"},
    {"analyse", "analyze"},
    {"analysed", "analyzed"},
    {"analyser", "analyzer"},
    {"analysers", "analyzers"},
    {"analyses", "analyzes"},
    {"analysing", "analyzing"},
    {"apnoea", "apnea"},
    {"apologise", "apologize"},
    {"apologised", "apologized"},
    {"apologises", "apologizes"},
    {"apologising", "apologizing"},
    {"appal", "appall"},
    {"appals", "appalls"},
    {"arbour", "arbor"},
    {"arbours", "arbors"},
    {"archaeology", "archeology"},
    {"armour", "armor"},
    {"armoured", "armored"},
    {"armoury", "armory"},
    {"artefact", "artifact"},
    {"artefacts", "artifacts"},
    {"authorisation", "authorization"},
    {"authorisations", "authorizations"},
    {"authorise", "authorize"},
    {"authorised", "authorized"},
    {"authorises", "authorizes"},
    {"authorising", "authorizing"},
    {"bacteraemia", "bacteremia"},
    {"behaviour", "behavior"},
    {"behavioural", "behavioral"},
    {"behaviourally", "behaviorally"},
    {"behaviours", "behaviors"},
    {"caesarean", "cesarean"},
    {"calibre", "caliber"},
    {"cancelled", "canceled"},
    {"cancelling", "canceling"},
    {"candour", "candor"},
    {"capitalisation", "capitalization"},
    {"capitalise", "capitalize"},
    {"capitalised", "capitalized"},
    {"capitalises", "capitalizes"},
    {"capitalising", "capitalizing"},
    {"catalogue", "catalog"},
    {"catalogued", "cataloged"},
    {"catalogues", "catalogs"},
    {"catalyse", "catalyze"},
    {"catalysed", "catalyzed"},
    {"catalyses", "catalyzes"},
    {"catalysing", "catalyzing"},
    {"categorisation", "categorization"},
    {"categorisations", "categorizations"},
    {"categorise", "categorize"},
    {"categorised", "categorized"},
    {"categorises", "categorizes"},
    {"categorising", "categorizing"},
    {"catheterisation", "catheterization"},
    {"catheterise", "catheterize"},
    {"catheterised", "catheterized"},
    {"catheterises", "catheterizes"},
    {"catheterising", "catheterizing"},
    {"cauterise", "cauterize"},
    {"cauterised", "cauterized"},
    {"centimetre", "centimeter"},
    {"centimetres", "centimeters"},
    {"centralisation", "centralization"},
    {"centralise", "centralize"},
    {"centralised", "centralized"},
    {"centralises", "centralizes"},
    {"centralising", "centralizing"},
    {"centre", "center"},
    {"centres", "centers"},
    {"channelled", "channeled"},
    {"channelling", "channeling"},
    {"characterisation", "characterization"},
    {"characterisations", "characterizations"},
    {"characterise", "characterize"},
    {"characterised", "characterized"},
    {"characterises", "characterizes"},
    {"characterising", "characterizing"},
    {"cheque", "check"},
    {"chequered", "checkered"},
    {"cheques", "checks"},
    {"civilisation", "civilization"},
    {"civilisations", "civilizations"},
    {"civilised", "civilized"},
    {"clamour", "clamor"},
    {"clamoured", "clamored"},
    {"clamouring", "clamoring"},
    {"clamours", "clamors"},
    {"coeliac", "celiac"},
    {"colonisation", "colonization"},
    {"colonise", "colonize"},
    {"colonised", "colonized"},
    {"colonises", "colonizes"},
    {"colonising", "colonizing"},
    {"colour", "color"},
    {"colouration", "coloration"},
    {"coloured", "colored"},
    {"colourful", "colorful"},
    {"colouring", "coloring"},
    {"colourless", "colorless"},
    {"colours", "colors"},
    {"computerise", "computerize"},
    {"computerised", "computerized"},
    {"computerises", "computerizes"},
    {"computerising", "computerizing"},
    {"connexion", "connection"},
    {"cosy", "cozy"},
    {"counselled", "counseled"},
    {"counselling", "counseling"},
    {"counsellor", "counselor"},
    {"counsellors", "counselors"},
    {"criticise", "criticize"},
    {"criticised", "criticized"},
    {"criticises", "criticizes"},
    {"criticising", "criticizing"},
    {"crystalisation", "crystalization"},
    {"crystalise", "crystalize"},
    {"crystalised", "crystalized"},
    {"crystalises", "crystalizes"},
    {"crystalising", "crystalizing"},
    {"customisation", "customization"},
    {"customise", "customize"},
    {"customised", "customized"},
    {"customises", "customizes"},
    {"customising", "customizing"},
    {"decilitre", "deciliter"},
    {"defence", "defense"},
    {"defences", "defenses"},
    {"demeanour", "demeanor"},
    {"desensitisation", "desensitization"},
    {"desensitise", "desensitize"},
    {"desensitised", "desensitized"},
    {"desensitises", "desensitizes"},
    {"desensitising", "desensitizing"},
    {"dialled", "dialed"},
    {"dialling", "dialing"},
    {"dialyse", "dialyze"},
    {"dialysed", "dialyzed"},
    {"dialysing", "dialyzing"},
    {"diarrhoea", "diarrhea"},
    {"digitisation", "digitization"},
    {"digitise", "digitize"},
    {"digitised", "digitized"},
    {"digitises", "digitizes"},
    {"digitising", "digitizing"},
    {"distil", "distill"},
    {"distils", "distills"},
    {"draught", "draft"},
    {"draughts", "drafts"},
    {"draughty", "drafty"},
    {"dysmenorrhoea", "dysmenorrhea"},
    {"dyspnoea", "dyspnea"},
    {"electrolyse", "electrolyze"},
    {"electrolysed", "electrolyzed"},
    {"emphasise", "emphasize"},
    {"emphasised", "emphasized"},
    {"emphasises", "emphasizes"},
    {"emphasising", "emphasizing"},
    {"encyclopaedia", "encyclopedia"},
    {"endeavour", "endeavor"},
    {"endeavoured", "endeavored"},
    {"endeavouring", "endeavoring"},
    {"endeavours", "endeavors"},
    {"enrol", "enroll"},
    {"enrolment", "enrollment"},
    {"enrols", "enrolls"},
    {"enthral", "enthrall"},
    {"epicentre", "epicenter"},
    {"epitomise", "epitomize"},
    {"epitomised", "epitomized"},
    {"epitomises", "epitomizes"},
    {"epitomising", "epitomizing"},
    {"euthanise", "euthanize"},
    {"euthanised", "euthanized"},
    {"euthanises", "euthanizes"},
    {"euthanising", "euthanizing"},
    {"faecal", "fecal"},
    {"faeces", "feces"},
    {"familiarise", "familiarize"},
    {"familiarised", "familiarized"},
    {"familiarises", "familiarizes"},
    {"familiarising", "familiarizing"},
    {"favour", "favor"},
    {"favourable", "favorable"},
    {"favourably", "favorably"},
    {"favoured", "favored"},
    {"favouring", "favoring"},
    {"favourite", "favorite"},
    {"favourites", "favorites"},
    {"favours", "favors"},
    {"fertilisation", "fertilization"},
    {"fertilise", "fertilize"},
    {"fertilised", "fertilized"},
    {"fertiliser", "fertilizer"},
    {"fertilisers", "fertilizers"},
    {"fertilises", "fertilizes"},
    {"fertilising", "fertilizing"},
    {"fervour", "fervor"},
    {"fibre", "fiber"},
    {"fibres", "fibers"},
    {"finalise", "finalize"},
    {"finalised", "finalized"},
    {"finalises", "finalizes"},
    {"finalising", "finalizing"},
    {"flavour", "flavor"},
    {"flavoured", "flavored"},
    {"flavourful", "flavorful"},
    {"flavouring", "flavoring"},
    {"flavourless", "flavorless"},
    {"flavours", "flavors"},
    {"foetal", "fetal"},
    {"foetus", "fetus"},
    {"foetuses", "fetuses"},
    {"fuelled", "fueled"},
    {"fuelling", "fueling"},
    {"fulfil", "fulfill"},
    {"fulfilment", "fulfillment"},
    {"fulfils", "fulfills"},
    {"gaol", "jail"},
    {"generalisation", "generalization"},
    {"generalisations", "generalizations"},
    {"generalise", "generalize"},
    {"generalised", "generalized"},
    {"generalises", "generalizes"},
    {"generalising", "generalizing"},
    {"globalisation", "globalization"},
    {"globalise", "globalize"},
    {"globalised", "globalized"},
    {"globalises", "globalizes"},
    {"globalising", "globalizing"},
    {"glycaemic", "glycemic"},
    {"goitre", "goiter"},
    {"goitres", "goiters"},
    {"gonorrhoea", "gonorrhea"},
    {"gramme", "gram"},
    {"grammes", "grams"},
    {"grey", "gray"},
    {"greyish", "grayish"},
    {"greys", "grays"},
    {"grovelling", "groveling"},
    {"gynaecological", "gynecological"},
    {"gynaecologist", "gynecologist"},
    {"gynaecology", "gynecology"},
    {"haem", "heme"},
    {"haemangioma", "hemangioma"},
    {"haematemesis", "hematemesis"},
    {"haematologist", "hematologist"},
    {"haematology", "hematology"},
    {"haematoma", "hematoma"},
    {"haematuria", "hematuria"},
    {"haemochromatosis", "hemochromatosis"},
    {"haemodialysis", "hemodialysis"},
    {"haemodynamic", "hemodynamic"},
    {"haemoglobin", "hemoglobin"},
    {"haemolysis", "hemolysis"},
    {"haemolytic", "hemolytic"},
    {"haemophilia", "hemophilia"},
    {"haemoptysis", "hemoptysis"},
    {"haemorrhage", "hemorrhage"},
    {"haemorrhages", "hemorrhages"},
    {"haemorrhagic", "hemorrhagic"},
    {"haemorrhoids", "hemorrhoids"},
    {"haemostasis", "hemostasis"},
    {"haemostat", "hemostat"},
    {"harbour", "harbor"},
    {"harboured", "harbored"},
    {"harbouring", "harboring"},
    {"harbours", "harbors"},
    {"harmonise", "harmonize"},
    {"harmonised", "harmonized"},
    {"harmonises", "harmonizes"},
    {"harmonising", "harmonizing"},
    {"honour", "honor"},
    {"honourable", "honorable"},
    {"honoured", "honored"},
    {"honouring", "honoring"},
    {"honours", "honors"},
    {"hospitalisation", "hospitalization"},
    {"hospitalisations", "hospitalizations"},
    {"hospitalise", "hospitalize"},
    {"hospitalised", "hospitalized"},
    {"hospitalises", "hospitalizes"},
    {"hospitalising", "hospitalizing"},
    {"humour", "humor"},
    {"humoured", "humored"},
    {"humourless", "humorless"},
    {"humours", "humors"},
    {"hydrolyse", "hydrolyze"},
    {"hydrolysed", "hydrolyzed"},
    {"hydrolysing", "hydrolyzing"},
    {"hypercalcaemia", "hypercalcemia"},
    {"hyperglycaemia", "hyperglycemia"},
    {"hyperglycaemic", "hyperglycemic"},
    {"hyperkalaemia", "hyperkalemia"},
    {"hypernatraemia", "hypernatremia"},
    {"hypocalcaemia", "hypocalcemia"},
    {"hypoglycaemia", "hypoglycemia"},
    {"hypoglycaemic", "hypoglycemic"},
    {"hypokalaemia", "hypokalemia"},
    {"hyponatraemia", "hyponatremia"},
    {"hypothesise", "hypothesize"},
    {"hypothesised", "hypothesized"},
    {"hypothesises", "hypothesizes"},
    {"hypothesising", "hypothesizing"},
    {"hypoxaemia", "hypoxemia"},
    {"immobilisation", "immobilization"},
    {"immobilise", "immobilize"},
    {"immobilised", "immobilized"},
    {"immunisation", "immunization"},
    {"immunisations", "immunizations"},
    {"immunise", "immunize"},
    {"immunised", "immunized"},
    {"immunises", "immunizes"},
    {"immunising", "immunizing"},
    {"individualise", "individualize"},
    {"individualised", "individualized"},
    {"individualises", "individualizes"},
    {"individualising", "individualizing"},
    {"industrialisation", "industrialization"},
    {"industrialise", "industrialize"},
    {"industrialised", "industrialized"},
    {"industrialises", "industrializes"},
    {"industrialising", "industrializing"},
    {"instil", "instill"},
    {"instils", "instills"},
    {"ionisation", "ionization"},
    {"ionise", "ionize"},
    {"ionised", "ionized"},
    {"ionises", "ionizes"},
    {"ionising", "ionizing"},
    {"ischaemia", "ischemia"},
    {"ischaemic", "ischemic"},
    {"jeopardise", "jeopardize"},
    {"jeopardised", "jeopardized"},
    {"jeopardises", "jeopardizes"},
    {"jeopardising", "jeopardizing"},
    {"jewelled", "jeweled"},
    {"jewellery", "jewelry"},
    {"judgement", "judgment"},
    {"judgements", "judgments"},
    {"kerb", "curb"},
    {"kerbs", "curbs"},
    {"kilogramme", "kilogram"},
    {"kilogrammes", "kilograms"},
    {"kilometre", "kilometer"},
    {"kilometres", "kilometers"},
    {"labelled", "labeled"},
    {"labelling", "labeling"},
    {"labour", "labor"},
    {"laboured", "labored"},
    {"labourer", "laborer"},
    {"labourers", "laborers"},
    {"labouring", "laboring"},
    {"labours", "labors"},
    {"legalisation", "legalization"},
    {"legalise", "legalize"},
    {"legalised", "legalized"},
    {"legalises", "legalizes"},
    {"legalising", "legalizing"},
    {"leukaemia", "leukemia"},
    {"leukaemias", "leukemias"},
    {"levelled", "leveled"},
    {"levelling", "leveling"},
    {"licence", "license"},
    {"licences", "licenses"},
    {"litre", "liter"},
    {"litres", "liters"},
    {"localisation", "localization"},
    {"localise", "localize"},
    {"localised", "localized"},
    {"localises", "localizes"},
    {"localising", "localizing"},
    {"lustre", "luster"},
    {"magnetise", "magnetize"},
    {"magnetised", "magnetized"},
    {"magnetises", "magnetizes"},
    {"magnetising", "magnetizing"},
    {"manoeuvre", "maneuver"},
    {"manoeuvred", "maneuvered"},
    {"manoeuvres", "maneuvers"},
    {"manoeuvring", "maneuvering"},
    {"marvellous", "marvelous"},
    {"maximise", "maximize"},
    {"maximised", "maximized"},
    {"maximises", "maximizes"},
    {"maximising", "maximizing"},
    {"meagre", "meager"},
    {"mediaeval", "medieval"},
    {"memorise", "memorize"},
    {"memorised", "memorized"},
    {"memorises", "memorizes"},
    {"memorising", "memorizing"},
    {"metabolise", "metabolize"},
    {"metabolised", "metabolized"},
    {"metabolises", "metabolizes"},
    {"metabolising", "metabolizing"},
    {"metre", "meter"},
    {"metres", "meters"},
    {"micrometre", "micrometer"},
    {"millilitre", "milliliter"},
    {"millilitres", "milliliters"},
    {"millimetre", "millimeter"},
    {"millimetres", "millimeters"},
    {"minimisation", "minimization"},
    {"minimisations", "minimizations"},
    {"minimise", "minimize"},
    {"minimised", "minimized"},
    {"minimises", "minimizes"},
    {"minimising", "minimizing"},
    {"mitre", "miter"},
    {"mobilisation", "mobilization"},
    {"mobilise", "mobilize"},
    {"mobilised", "mobilized"},
    {"mobilises", "mobilizes"},
    {"mobilising", "mobilizing"},
    {"modelled", "modeled"},
    {"modelling", "modeling"},
    {"modernisation", "modernization"},
    {"modernise", "modernize"},
    {"modernised", "modernized"},
    {"modernises", "modernizes"},
    {"modernising", "modernizing"},
    {"mould", "mold"},
    {"moulded", "molded"},
    {"moulds", "molds"},
    {"mouldy", "moldy"},
    {"moustache", "mustache"},
    {"nanometre", "nanometer"},
    {"nebulised", "nebulized"},
    {"nebuliser", "nebulizer"},
    {"nebulisers", "nebulizers"},
    {"neighbour", "neighbor"},
    {"neighbourhood", "neighborhood"},
    {"neighbouring", "neighboring"},
    {"neighbourly", "neighborly"},
    {"neighbours", "neighbors"},
    {"neutralisation", "neutralization"},
    {"neutralise", "neutralize"},
    {"neutralised", "neutralized"},
    {"neutralises", "neutralizes"},
    {"neutralising", "neutralizing"},
    {"normalisation", "normalization"},
    {"normalisations", "normalizations"},
    {"normalise", "normalize"},
    {"normalised", "normalized"},
    {"normalises", "normalizes"},
    {"normalising", "normalizing"},
    {"ochre", "ocher"},
    {"odour", "odor"},
    {"odourless", "odorless"},
    {"odours", "odors"},
    {"oedema", "edema"},
    {"oedemas", "edemas"},
    {"oedematous", "edematous"},
    {"oesophageal", "esophageal"},
    {"oesophagectomy", "esophagectomy"},
    {"oesophagitis", "esophagitis"},
    {"oesophagus", "esophagus"},
    {"oestradiol", "estradiol"},
    {"oestrogen", "estrogen"},
    {"oestrogens", "estrogens"},
    {"offence", "offense"},
    {"offences", "offenses"},
    {"optimisation", "optimization"},
    {"optimisations", "optimizations"},
    {"optimise", "optimize"},
    {"optimised", "optimized"},
    {"optimises", "optimizes"},
    {"optimising", "optimizing"},
    {"organisation", "organization"},
    {"organisations", "organizations"},
    {"organise", "organize"},
    {"organised", "organized"},
    {"organiser", "organizer"},
    {"organisers", "organizers"},
    {"organises", "organizes"},
    {"organising", "organizing"},
    {"orthopaedic", "orthopedic"},
    {"orthopaedics", "orthopedics"},
    {"orthopnoea", "orthopnea"},
    {"oxidise", "oxidize"},
    {"oxidised", "oxidized"},
    {"oxidises", "oxidizes"},
    {"oxidising", "oxidizing"},
    {"paediatric", "pediatric"},
    {"paediatrician", "pediatrician"},
    {"paediatrics", "pediatrics"},
    {"palaeontology", "paleontology"},
    {"paralyse", "paralyze"},
    {"paralysed", "paralyzed"},
    {"paralysing", "paralyzing"},
    {"parlour", "parlor"},
    {"parlours", "parlors"},
    {"patronise", "patronize"},
    {"patronised", "patronized"},
    {"patronises", "patronizes"},
    {"patronising", "patronizing"},
    {"personalisation", "personalization"},
    {"personalise", "personalize"},
    {"personalised", "personalized"},
    {"personalises", "personalizes"},
    {"personalising", "personalizing"},
    {"plough", "plow"},
    {"ploughs", "plows"},
    {"polarisation", "polarization"},
    {"polarise", "polarize"},
    {"polarised", "polarized"},
    {"polarises", "polarizes"},
    {"polarising", "polarizing"},
    {"practise", "practice"},
    {"practised", "practiced"},
    {"practises", "practices"},
    {"practising", "practicing"},
    {"pressurise", "pressurize"},
    {"pressurised", "pressurized"},
    {"pressurises", "pressurizes"},
    {"pressurising", "pressurizing"},
    {"pretence", "pretense"},
    {"prioritisation", "prioritization"},
    {"prioritise", "prioritize"},
    {"prioritised", "prioritized"},
    {"prioritises", "prioritizes"},
    {"prioritising", "prioritizing"},
    {"programme", "program"},
    {"programmes", "programs"},
    {"pyjamas", "pajamas"},
    {"quarrelled", "quarreled"},
    {"rancour", "rancor"},
    {"randomisation", "randomization"},
    {"randomisations", "randomizations"},
    {"randomise", "randomize"},
    {"randomised", "randomized"},
    {"randomises", "randomizes"},
    {"randomising", "randomizing"},
    {"realisation", "realization"},
    {"realisations", "realizations"},
    {"realise", "realize"},
    {"realised", "realized"},
    {"realises", "realizes"},
    {"realising", "realizing"},
    {"recognisable", "recognizable"},
    {"recognise", "recognize"},
    {"recognised", "recognized"},
    {"recognises", "recognizes"},
    {"recognising", "recognizing"},
    {"reconnoitre", "reconnoiter"},
    {"revitalise", "revitalize"},
    {"revitalised", "revitalized"},
    {"revitalises", "revitalizes"},
    {"revitalising", "revitalizing"},
    {"rhinorrhoea", "rhinorrhea"},
    {"rigour", "rigor"},
    {"rumour", "rumor"},
    {"rumoured", "rumored"},
    {"rumours", "rumors"},
    {"sabre", "saber"},
    {"sanitise", "sanitize"},
    {"sanitised", "sanitized"},
    {"sanitiser", "sanitizer"},
    {"sanitisers", "sanitizers"},
    {"saviour", "savior"},
    {"saviours", "saviors"},
    {"savour", "savor"},
    {"savoured", "savored"},
    {"savouring", "savoring"},
    {"savours", "savors"},
    {"savoury", "savory"},
    {"sceptic", "skeptic"},
    {"sceptical", "skeptical"},
    {"scepticism", "skepticism"},
    {"sceptre", "scepter"},
    {"scrutinise", "scrutinize"},
    {"scrutinised", "scrutinized"},
    {"scrutinises", "scrutinizes"},
    {"scrutinising", "scrutinizing"},
    {"sensitisation", "sensitization"},
    {"sensitise", "sensitize"},
    {"sensitised", "sensitized"},
    {"sensitises", "sensitizes"},
    {"sensitising", "sensitizing"},
    {"septicaemia", "septicemia"},
    {"signalled", "signaled"},
    {"signalling", "signaling"},
    {"skilful", "skillful"},
    {"skilfully", "skillfully"},
    {"sombre", "somber"},
    {"specialisation", "specialization"},
    {"specialisations", "specializations"},
    {"specialise", "specialize"},
    {"specialised", "specialized"},
    {"specialises", "specializes"},
    {"specialising", "specializing"},
    {"specialities", "specialties"},
    {"speciality", "specialty"},
    {"spectre", "specter"},
    {"splendour", "splendor"},
    {"stabilisation", "stabilization"},
    {"stabilise", "stabilize"},
    {"stabilised", "stabilized"},
    {"stabiliser", "stabilizer"},
    {"stabilisers", "stabilizers"},
    {"stabilises", "stabilizes"},
    {"stabilising", "stabilizing"},
    {"standardisation", "standardization"},
    {"standardisations", "standardizations"},
    {"standardise", "standardize"},
    {"standardised", "standardized"},
    {"standardises", "standardizes"},
    {"standardising", "standardizing"},
    {"steatorrhoea", "steatorrhea"},
    {"sterilisation", "sterilization"},
    {"sterilise", "sterilize"},
    {"sterilised", "sterilized"},
    {"steriliser", "sterilizer"},
    {"sterilises", "sterilizes"},
    {"sterilising", "sterilizing"},
    {"sulphate", "sulfate"},
    {"sulphates", "sulfates"},
    {"sulphide", "sulfide"},
    {"sulphonamide", "sulfonamide"},
    {"sulphonylurea", "sulfonylurea"},
    {"sulphonylureas", "sulfonylureas"},
    {"sulphur", "sulfur"},
    {"summarise", "summarize"},
    {"summarised", "summarized"},
    {"summarises", "summarizes"},
    {"summarising", "summarizing"},
    {"symbolise", "symbolize"},
    {"symbolised", "symbolized"},
    {"symbolises", "symbolizes"},
    {"symbolising", "symbolizing"},
    {"sympathise", "sympathize"},
    {"sympathised", "sympathized"},
    {"sympathises", "sympathizes"},
    {"sympathising", "sympathizing"},
    {"synchronisation", "synchronization"},
    {"synchronise", "synchronize"},
    {"synchronised", "synchronized"},
    {"synchronises", "synchronizes"},
    {"synchronising", "synchronizing"},
    {"tachypnoea", "tachypnea"},
    {"theatre", "theater"},
    {"theatres", "theaters"},
    {"theorise", "theorize"},
    {"theorised", "theorized"},
    {"theorises", "theorizes"},
    {"theorising", "theorizing"},
    {"titre", "titer"},
    {"titres", "titers"},
    {"totalled", "totaled"},
    {"totalling", "totaling"},
    {"toxaemia", "toxemia"},
    {"tranquilliser", "tranquilizer"},
    {"tranquillisers", "tranquilizers"},
    {"tranquillity", "tranquility"},
    {"travelled", "traveled"},
    {"traveller", "traveler"},
    {"travellers", "travelers"},
    {"travelling", "traveling"},
    {"trivialise", "trivialize"},
    {"trivialised", "trivialized"},
    {"trivialises", "trivializes"},
    {"trivialising", "trivializing"},
    {"tumour", "tumor"},
    {"tumours", "tumors"},
    {"tunnelled", "tunneled"},
    {"tyre", "tire"},
    {"tyres", "tires"},
    {"uraemia", "uremia"},
    {"utilisation", "utilization"},
    {"utilise", "utilize"},
    {"utilised", "utilized"},
    {"utilises", "utilizes"},
    {"utilising", "utilizing"},
    {"valour", "valor"},
    {"vaporise", "vaporize"},
    {"vaporiser", "vaporizer"},
    {"vapour", "vapor"},
    {"vapours", "vapors"},
    {"vigour", "vigor"},
    {"viraemia", "viremia"},
    {"visualisation", "visualization"},
    {"visualisations", "visualizations"},
    {"visualise", "visualize"},
    {"visualised", "visualized"},
    {"visualises", "visualizes"},
    {"visualising", "visualizing"},
    {"vocalise", "vocalize"},
    {"vocalised", "vocalized"},
    {"vocalises", "vocalizes"},
    {"vocalising", "vocalizing"},
    {"whisky", "whiskey"},
    {"wilful", "willful"},
    {"wilfully", "willfully"},
    {"woollen", "woolen"},
    {"yoghurt", "yogurt"},
    {"yoghurts", "yogurts"},
}};

}  // namespace aumol::eval
