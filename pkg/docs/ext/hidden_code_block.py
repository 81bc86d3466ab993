"""
Sphinx directive ``hidden-code-block``: a literal block folded into an HTML ``<details>`` element.
Every khrot module starts with its licence in such a block, so the API pages open with the docstring proper.

.. code-block:: rst

    ..  hidden-code-block:: text
        :label: View Licence Agreement <br>
        :starthidden: yes

        The MIT License (MIT)

Non-HTML builders render the block as a plain literal block.
"""

from docutils import nodes
from docutils.parsers.rst import directives
from sphinx.directives.code import CodeBlock


def _flag(argument: str) -> bool:
    return directives.choice(argument.lower(), ('yes', 'no', 'true', 'false')) in ('yes', 'true')


class hidden_code_block(nodes.General, nodes.FixedTextElement):
    pass


class HiddenCodeBlock(CodeBlock):
    option_spec = dict(CodeBlock.option_spec, label=directives.unchanged, starthidden=_flag)


    def run(self):
        text = '\n'.join(self.content)
        node = hidden_code_block(text, text)
        node['language'] = self.arguments[0] if self.arguments else 'text'
        node['linenos'] = 'linenos' in self.options
        node['label'] = self.options.get('label', 'Show code')
        node['starthidden'] = self.options.get('starthidden', True)
        self.set_source_info(node)
        return [node]


def visit_html(self, node):
    summary = node['label'].replace('<br>', '').strip()
    opened = '' if node['starthidden'] else ' open'
    self.body.append(f'<details{opened}><summary>{summary}</summary>')

    # The literal block visitor renders the highlighted code and then skips the node
    try:
        self.visit_literal_block(node)
    except nodes.SkipNode:
        pass

    self.body.append('</details>')
    raise nodes.SkipNode


def visit_other(self, node):
    self.visit_literal_block(node)


def depart_other(self, node):
    self.depart_literal_block(node)


def setup(app):
    app.add_directive('hidden-code-block', HiddenCodeBlock)
    app.add_node(hidden_code_block,
                 html=(visit_html, None),
                 latex=(visit_other, depart_other),
                 text=(visit_other, depart_other),
                 man=(visit_other, depart_other))
    return {'parallel_read_safe': True}
