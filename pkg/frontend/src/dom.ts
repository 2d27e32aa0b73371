// DOM element builders, just enough to avoid innerHTML.

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className = '',
  text = '',
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text) node.textContent = text;
  return node;
}

export function link(href: string, text: string, className = ''): HTMLAnchorElement {
  const anchor = el('a', className, text);
  anchor.href = href;
  return anchor;
}

export function noData(): HTMLParagraphElement {
  return el('p', 'no-data', 'no data');
}

export function section(title: string, ...children: HTMLElement[]): HTMLElement {
  const wrapper = el('section', 'panel');
  wrapper.append(el('h3', '', title), ...children);
  return wrapper;
}
