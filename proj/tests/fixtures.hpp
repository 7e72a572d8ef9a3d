#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "treeswap/conllu.hpp"
#include "treeswap/eligibility.hpp"
#include "treeswap/types.hpp"

// Hand-annotated bilingual fixture sentences. Each block is one CoNLL-U
// sentence whose `# text` line linearizes byte-exactly from the token forms
// and SpaceAfter flags.

namespace fixtures {

inline constexpr std::string_view kEnChasing = R"(# text = The black dog is chasing the red cat.
1	The	the	DET	_	_	3	det	_	_
2	black	black	ADJ	_	_	3	amod	_	_
3	dog	dog	NOUN	_	_	5	nsubj	_	_
4	is	be	AUX	_	_	5	aux	_	_
5	chasing	chase	VERB	_	_	0	root	_	_
6	the	the	DET	_	_	8	det	_	_
7	red	red	ADJ	_	_	8	amod	_	_
8	cat	cat	NOUN	_	_	5	obj	_	SpaceAfter=No
9	.	.	PUNCT	_	_	5	punct	_	_
)";

inline constexpr std::string_view kHuChasing = R"(# text = A fekete kutya kergeti a piros macskát.
1	A	a	DET	_	_	3	det	_	_
2	fekete	fekete	ADJ	_	_	3	amod	_	_
3	kutya	kutya	NOUN	_	_	4	nsubj	_	_
4	kergeti	kerget	VERB	_	_	0	root	_	_
5	a	a	DET	_	_	7	det	_	_
6	piros	piros	ADJ	_	_	7	amod	_	_
7	macskát	macska	NOUN	_	_	4	obj	_	SpaceAfter=No
8	.	.	PUNCT	_	_	4	punct	_	_
)";

inline constexpr std::string_view kEnCooking = R"(# text = Gordon Ramsay is cooking a delicious soup.
1	Gordon	Gordon	PROPN	_	_	4	nsubj	_	_
2	Ramsay	Ramsay	PROPN	_	_	1	flat	_	_
3	is	be	AUX	_	_	4	aux	_	_
4	cooking	cook	VERB	_	_	0	root	_	_
5	a	a	DET	_	_	7	det	_	_
6	delicious	delicious	ADJ	_	_	7	amod	_	_
7	soup	soup	NOUN	_	_	4	obj	_	SpaceAfter=No
8	.	.	PUNCT	_	_	4	punct	_	_
)";

inline constexpr std::string_view kHuCooking = R"(# text = Gordon Ramsay egy finom levest főz.
1	Gordon	Gordon	PROPN	_	_	6	nsubj	_	_
2	Ramsay	Ramsay	PROPN	_	_	1	flat	_	_
3	egy	egy	DET	_	_	5	det	_	_
4	finom	finom	ADJ	_	_	5	amod	_	_
5	levest	leves	NOUN	_	_	6	obj	_	_
6	főz	főz	VERB	_	_	0	root	_	SpaceAfter=No
7	.	.	PUNCT	_	_	6	punct	_	_
)";

inline constexpr std::string_view kEnRegained = R"(# text = Sauron has regained much of his former strength.
1	Sauron	Sauron	PROPN	_	_	3	nsubj	_	_
2	has	have	AUX	_	_	3	aux	_	_
3	regained	regain	VERB	_	_	0	root	_	_
4	much	much	PRON	_	_	3	obj	_	_
5	of	of	ADP	_	_	8	case	_	_
6	his	his	PRON	_	_	8	nmod:poss	_	_
7	former	former	ADJ	_	_	8	amod	_	_
8	strength	strength	NOUN	_	_	4	nmod	_	SpaceAfter=No
9	.	.	PUNCT	_	_	3	punct	_	_
)";

inline constexpr std::string_view kHuRegained = R"(# text = Szauron szinte teljesen visszanyerte az erejét.
1	Szauron	Szauron	PROPN	_	_	4	nsubj	_	_
2	szinte	szinte	ADV	_	_	3	advmod	_	_
3	teljesen	teljesen	ADV	_	_	4	advmod	_	_
4	visszanyerte	visszanyer	VERB	_	_	0	root	_	_
5	az	az	DET	_	_	6	det	_	_
6	erejét	erő	NOUN	_	_	4	obj	_	SpaceAfter=No
7	.	.	PUNCT	_	_	4	punct	_	_
)";

inline constexpr std::string_view kEnFollowed = R"(# text = A hooded figure has followed us into the woods.
1	A	a	DET	_	_	3	det	_	_
2	hooded	hooded	ADJ	_	_	3	amod	_	_
3	figure	figure	NOUN	_	_	5	nsubj	_	_
4	has	have	AUX	_	_	5	aux	_	_
5	followed	follow	VERB	_	_	0	root	_	_
6	us	we	PRON	_	_	5	obj	_	_
7	into	into	ADP	_	_	9	case	_	_
8	the	the	DET	_	_	9	det	_	_
9	woods	wood	NOUN	_	_	5	obl	_	SpaceAfter=No
10	.	.	PUNCT	_	_	5	punct	_	_
)";

inline constexpr std::string_view kHuFollowed = R"(# text = Egy csuklyás alak követett minket az erdőbe.
1	Egy	egy	DET	_	_	3	det	_	_
2	csuklyás	csuklyás	ADJ	_	_	3	amod	_	_
3	alak	alak	NOUN	_	_	4	nsubj	_	_
4	követett	követ	VERB	_	_	0	root	_	_
5	minket	mi	PRON	_	_	4	obj	_	_
6	az	az	DET	_	_	7	det	_	_
7	erdőbe	erdő	NOUN	_	_	4	obl	_	SpaceAfter=No
8	.	.	PUNCT	_	_	4	punct	_	_
)";

inline constexpr std::string_view kEnWorthThat = R"(# text = Nothing should be worth that.
1	Nothing	nothing	PRON	_	_	4	nsubj	_	_
2	should	should	AUX	_	_	4	aux	_	_
3	be	be	AUX	_	_	4	cop	_	_
4	worth	worth	ADJ	_	_	0	root	_	_
5	that	that	PRON	_	_	4	obj	_	SpaceAfter=No
6	.	.	PUNCT	_	_	4	punct	_	_
)";

inline constexpr std::string_view kHuWorthThat = R"(# text = Semmi nem ér ennyit.
1	Semmi	semmi	PRON	_	_	3	nsubj	_	_
2	nem	nem	ADV	_	_	3	advmod	_	_
3	ér	ér	VERB	_	_	0	root	_	_
4	ennyit	ennyi	PRON	_	_	3	obj	_	SpaceAfter=No
5	.	.	PUNCT	_	_	3	punct	_	_
)";

inline constexpr std::string_view kEnWorthMillions = R"(# text = Those two specimen are worth millions to the bio-weapons division.
1	Those	that	DET	_	_	3	det	_	_
2	two	two	NUM	_	_	3	nummod	_	_
3	specimen	specimen	NOUN	_	_	5	nsubj	_	_
4	are	be	AUX	_	_	5	cop	_	_
5	worth	worth	ADJ	_	_	0	root	_	_
6	millions	million	NOUN	_	_	5	obj	_	_
7	to	to	ADP	_	_	10	case	_	_
8	the	the	DET	_	_	10	det	_	_
9	bio-weapons	bio-weapon	NOUN	_	_	10	compound	_	_
10	division	division	NOUN	_	_	5	obl	_	SpaceAfter=No
11	.	.	PUNCT	_	_	5	punct	_	_
)";

inline constexpr std::string_view kHuWorthMillions = R"(# text = Az a két példány milliókat ér a biológiai fegyver részlegnek.
1	Az	az	DET	_	_	4	det	_	_
2	a	a	DET	_	_	4	det	_	_
3	két	két	NUM	_	_	4	nummod	_	_
4	példány	példány	NOUN	_	_	6	nsubj	_	_
5	milliókat	millió	NOUN	_	_	6	obj	_	_
6	ér	ér	VERB	_	_	0	root	_	_
7	a	a	DET	_	_	10	det	_	_
8	biológiai	biológiai	ADJ	_	_	10	amod	_	_
9	fegyver	fegyver	NOUN	_	_	10	compound	_	_
10	részlegnek	részleg	NOUN	_	_	6	obl	_	SpaceAfter=No
11	.	.	PUNCT	_	_	6	punct	_	_
)";

inline constexpr std::string_view kEnGets = R"(# text = Everybody gets the rocket ship.
1	Everybody	everybody	PRON	_	_	2	nsubj	_	_
2	gets	get	VERB	_	_	0	root	_	_
3	the	the	DET	_	_	5	det	_	_
4	rocket	rocket	NOUN	_	_	5	compound	_	_
5	ship	ship	NOUN	_	_	2	obj	_	SpaceAfter=No
6	.	.	PUNCT	_	_	2	punct	_	_
)";

inline constexpr std::string_view kHuGets = R"(# text = Mindenki kap rakétát.
1	Mindenki	mindenki	PRON	_	_	2	nsubj	_	_
2	kap	kap	VERB	_	_	0	root	_	_
3	rakétát	rakéta	NOUN	_	_	2	obj	_	SpaceAfter=No
4	.	.	PUNCT	_	_	2	punct	_	_
)";

inline constexpr std::string_view kEnHiding = R"(# text = Someone is hiding something.
1	Someone	someone	PRON	_	_	3	nsubj	_	_
2	is	be	AUX	_	_	3	aux	_	_
3	hiding	hide	VERB	_	_	0	root	_	_
4	something	something	PRON	_	_	3	obj	_	SpaceAfter=No
5	.	.	PUNCT	_	_	3	punct	_	_
)";

inline constexpr std::string_view kHuHiding = R"(# text = Valaki titkol valamit.
1	Valaki	valaki	PRON	_	_	2	nsubj	_	_
2	titkol	titkol	VERB	_	_	0	root	_	_
3	valamit	valami	PRON	_	_	2	obj	_	SpaceAfter=No
4	.	.	PUNCT	_	_	2	punct	_	_
)";

inline constexpr std::string_view kEnSeen = R"(# text = No one had seen my red bike since yesterday evening.
1	No	no	DET	_	_	2	det	_	_
2	one	one	PRON	_	_	4	nsubj	_	_
3	had	have	AUX	_	_	4	aux	_	_
4	seen	see	VERB	_	_	0	root	_	_
5	my	my	PRON	_	_	7	nmod:poss	_	_
6	red	red	ADJ	_	_	7	amod	_	_
7	bike	bike	NOUN	_	_	4	obj	_	_
8	since	since	ADP	_	_	10	case	_	_
9	yesterday	yesterday	NOUN	_	_	10	compound	_	_
10	evening	evening	NOUN	_	_	4	obl	_	SpaceAfter=No
11	.	.	PUNCT	_	_	4	punct	_	_
)";

inline constexpr std::string_view kHuSeen = R"(# text = Senki nem látta a piros biciklimet tegnap este óta.
1	Senki	senki	PRON	_	_	3	nsubj	_	_
2	nem	nem	ADV	_	_	3	advmod	_	_
3	látta	lát	VERB	_	_	0	root	_	_
4	a	a	DET	_	_	6	det	_	_
5	piros	piros	ADJ	_	_	6	amod	_	_
6	biciklimet	bicikli	NOUN	_	_	3	obj	_	_
7	tegnap	tegnap	ADV	_	_	8	advmod	_	_
8	este	este	NOUN	_	_	3	obl	_	_
9	óta	óta	ADP	_	_	8	case	_	SpaceAfter=No
10	.	.	PUNCT	_	_	3	punct	_	_
)";

inline constexpr std::string_view kEnSee = R"(# text = I see the fire in her eyes.
1	I	I	PRON	_	_	2	nsubj	_	_
2	see	see	VERB	_	_	0	root	_	_
3	the	the	DET	_	_	4	det	_	_
4	fire	fire	NOUN	_	_	2	obj	_	_
5	in	in	ADP	_	_	7	case	_	_
6	her	her	PRON	_	_	7	nmod:poss	_	_
7	eyes	eye	NOUN	_	_	2	obl	_	SpaceAfter=No
8	.	.	PUNCT	_	_	2	punct	_	_
)";

// Pro-drop target: the subject is only in the verb's inflection, so no token
// carries nsubj and the pair is ineligible on the target side.
inline constexpr std::string_view kHuSee = R"(# text = Látom a tüzet a szemében.
1	Látom	lát	VERB	_	_	0	root	_	_
2	a	a	DET	_	_	3	det	_	_
3	tüzet	tűz	NOUN	_	_	1	obj	_	_
4	a	a	DET	_	_	5	det	_	_
5	szemében	szem	NOUN	_	_	1	obl	_	SpaceAfter=No
6	.	.	PUNCT	_	_	1	punct	_	_
)";

// Tokenized surface (space before the final period); used by the noising
// tests, which join forms with single spaces.
inline constexpr std::string_view kEnBeaches = R"(1	We	we	PRON	_	_	3	nsubj	_	_
2	shall	shall	AUX	_	_	3	aux	_	_
3	fight	fight	VERB	_	_	0	root	_	_
4	on	on	ADP	_	_	6	case	_	_
5	the	the	DET	_	_	6	det	_	_
6	beaches	beach	NOUN	_	_	3	obl	_	_
7	.	.	PUNCT	_	_	3	punct	_	_
)";

inline constexpr std::string_view kBirdsFly = R"(# text = Birds fly.
1	Birds	bird	NOUN	_	_	2	nsubj	_	SpaceAfter=No
2	fly	fly	VERB	_	_	0	root	_	SpaceAfter=No
3	.	.	PUNCT	_	_	2	punct	_	_
)";

inline treeswap::Sentence sentence(std::string_view block) {
  std::vector<treeswap::Sentence> parsed = treeswap::parse_conllu(block);
  if (parsed.size() != 1) throw std::logic_error("fixture is not one sentence");
  return parsed.front();
}

inline treeswap::ParsedPair pair(std::string id, std::string_view src,
                                 std::string_view tgt) {
  treeswap::ParsedPair p;
  p.pair_id = id;
  p.doc_id = id.substr(0, id.rfind(':'));
  p.src = sentence(src);
  p.tgt = sentence(tgt);
  return p;
}

inline treeswap::EligiblePair eligible(const treeswap::ParsedPair& p) {
  treeswap::CheckOutcome outcome = treeswap::check_pair(p, {});
  if (!outcome.pair) throw std::logic_error("fixture pair is not eligible");
  return *outcome.pair;
}

// The eight bilingual pairs every swap method is demonstrated with.
inline std::vector<treeswap::ParsedPair> swap_corpus() {
  return {
      pair("fx:0", kEnChasing, kHuChasing),
      pair("fx:1", kEnCooking, kHuCooking),
      pair("fx:2", kEnRegained, kHuRegained),
      pair("fx:3", kEnFollowed, kHuFollowed),
      pair("fx:4", kEnWorthThat, kHuWorthThat),
      pair("fx:5", kEnWorthMillions, kHuWorthMillions),
      pair("fx:6", kEnGets, kHuGets),
      pair("fx:7", kEnHiding, kHuHiding),
  };
}

// swap_corpus plus the same-lemma pair whose target side is pro-drop.
inline std::vector<treeswap::ParsedPair> full_corpus() {
  std::vector<treeswap::ParsedPair> pairs = swap_corpus();
  pairs.push_back(pair("fx:8", kEnSeen, kHuSeen));
  pairs.push_back(pair("fx:9", kEnSee, kHuSee));
  return pairs;
}

}  // namespace fixtures
